import { decodeRows } from "./csv";
import { Dimension, FilterState } from "./filters";
import { Handlers, renderDashboard } from "./render";
import { DashboardConfig, Row } from "./types";
import { CategoryControl, Universes, ViewData, computeView } from "./view";

/** Owns the filter state and re-renders everything after each interaction. */
export class Dashboard {
  readonly state = new FilterState();
  private readonly universes: Universes;
  private page = 0;

  constructor(
    private readonly root: HTMLElement,
    readonly config: DashboardConfig,
    readonly rows: Row[],
  ) {
    this.universes = new Universes(rows, config.confidenceBinWidth || 0.05);
  }

  update(): ViewData {
    const view = computeView(this.rows, this.config, this.state,
                             this.universes, this.page);
    this.page = pageOf(view);
    renderDashboard(this.root, this.config.title, view, this.handlers());
    return view;
  }

  toggle(dimension: Dimension, value: string): ViewData {
    this.state.toggle(dimension, value);
    this.page = 0;
    return this.update();
  }

  setBrush(lo: number, hi: number): ViewData {
    this.state.brush = [lo, hi];
    this.page = 0;
    return this.update();
  }

  clearBrush(): ViewData {
    this.state.brush = null;
    this.page = 0;
    return this.update();
  }

  reset(): ViewData {
    this.state.clear();
    this.page = 0;
    return this.update();
  }

  turnPage(delta: number): ViewData {
    this.page += delta;
    return this.update();
  }

  private handlers(): Handlers {
    return {
      onToggle: (control: CategoryControl, value: string) =>
        this.toggle(control.dimension, value),
      onBrush: (lo, hi) => this.setBrush(lo, hi),
      onClearBrush: () => this.clearBrush(),
      onReset: () => this.reset(),
      onPage: (delta) => this.turnPage(delta),
    };
  }
}

function pageOf(view: ViewData): number {
  for (const control of view.controls) {
    if (control.kind === "correspondence_table") {
      return (control as { page: number }).page;
    }
  }
  return 0;
}

function embeddedJson(doc: Document, id: string): unknown {
  const node = doc.getElementById(id);
  if (!node || !node.textContent) {
    throw new Error(`embedded block #${id} is missing`);
  }
  return JSON.parse(node.textContent);
}

/** Entry point: decode the embedded blocks and build the dashboard. */
export function boot(doc: Document): Dashboard | null {
  const root = doc.getElementById("app");
  if (!root) return null;
  try {
    const config = embeddedJson(doc, "dashboard-config") as DashboardConfig;
    const data = embeddedJson(doc, "dashboard-data") as { csv: string };
    const dashboard = new Dashboard(root as HTMLElement, config,
                                    decodeRows(data.csv));
    dashboard.update();
    return dashboard;
  } catch (error) {
    const banner = doc.createElement("div");
    banner.className = "ad-error-banner";
    banner.textContent =
      `Failed to load the embedded dashboard data: ${String(error)}`;
    root.appendChild(banner);
    return null;
  }
}
