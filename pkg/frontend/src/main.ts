import { boot } from "./controller";

// the bundle is inlined at the end of <body>, so the embedded data blocks
// above it are already parsed
boot(document);
