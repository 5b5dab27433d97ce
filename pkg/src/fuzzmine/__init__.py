"""Mining of time-lagged association rules from event streams.

Given three timestamped streams (two triggers and one consequence), the
pipeline extracts every event triple allowed by a pair of time windows,
classifies the values and the elapsed time into fuzzy linguistic labels,
and aggregates the weighted readings into rules of the form
(trigger1, trigger2) => (elapsed-time, consequence) scored by support
and confidence. The rule set can be rendered as a table, a JSON report,
or a decision tree (text or DOT).
"""

from .config import PipelineConfig, config_findings, load_config, parse_config_dict
from .errors import (
    ConfigError,
    FuzzmineError,
    InputError,
    ParseError,
    StreamDataError,
    UndefinedMetricError,
)
from .fuzzy import (
    Classification,
    FuzzyInterval,
    Vocabulary,
    classify,
    membership,
    validate_vocabulary,
)
from .mining import (
    FuzzyRule,
    MiningConfig,
    NumericalAssociation,
    RuleInstance,
    RuleSet,
    WindowConfig,
    aggregate,
    apply_thresholds,
    confidence,
    extract_numerical,
    fuzzify,
    mine,
    support,
)
from .report import render_json, render_table, ruleset_to_report
from .streams import (
    Event,
    EventStream,
    StreamBundle,
    bundle_to_long_csv,
    parse_streams,
    parse_streams_csv,
    validate_bundle,
    validate_stream,
)
from .tree import (
    TreeNode,
    build_tree,
    render_ascii,
    render_dot,
    tree_from_structured,
    tree_to_structured,
)
from .validation import Finding, has_errors

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "ConfigError",
    "Event",
    "EventStream",
    "Finding",
    "FuzzmineError",
    "FuzzyInterval",
    "FuzzyRule",
    "InputError",
    "MiningConfig",
    "NumericalAssociation",
    "ParseError",
    "PipelineConfig",
    "RuleInstance",
    "RuleSet",
    "StreamBundle",
    "StreamDataError",
    "TreeNode",
    "UndefinedMetricError",
    "Vocabulary",
    "WindowConfig",
    "aggregate",
    "apply_thresholds",
    "build_tree",
    "bundle_to_long_csv",
    "classify",
    "config_findings",
    "confidence",
    "extract_numerical",
    "fuzzify",
    "has_errors",
    "load_config",
    "membership",
    "mine",
    "parse_config_dict",
    "parse_streams",
    "parse_streams_csv",
    "render_ascii",
    "render_dot",
    "render_json",
    "render_table",
    "ruleset_to_report",
    "support",
    "tree_from_structured",
    "tree_to_structured",
    "validate_bundle",
    "validate_stream",
    "validate_vocabulary",
]
