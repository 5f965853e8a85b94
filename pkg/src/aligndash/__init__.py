"""aligndash: ontology alignment evaluation with an interactive dashboard."""

from .alignio import (
    Alignment,
    AlignmentParseError,
    BadMeasureError,
    Correspondence,
    MissingEntityError,
    Relation,
    RelationKind,
    XmlSyntaxError,
    parse_alignment,
    serialize_alignment,
)
from .campaign import ConfigError, TestCase, Track, TrackConfig, load_track_config
from .dashboard import (
    AnnotatedCell,
    ControlKind,
    DashboardSpec,
    build_dataset,
    customize,
    decode_dataset,
    decode_embedded_dataset,
    default_spec,
    encode_dataset,
    render_dashboard,
)
from .evaluation import (
    BadIntervalError,
    BaselineConfig,
    BaselineMode,
    ConfusionCounts,
    EmptyInputError,
    EvalOutcome,
    GoldStandardCompleteness,
    MetricSet,
    baseline_match,
    classify,
    confusion,
    macro_average,
    metrics,
    micro_average,
    residual_reference,
    threshold,
)
from .ontology import (
    ElementType,
    OntologyIndex,
    RdfSyntax,
    RdfSyntaxError,
    UnsupportedSyntaxError,
    load_ontology,
    load_ontology_file,
    local_name,
)

__version__ = "0.1.0"
