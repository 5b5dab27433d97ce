"""Windowed association extraction, fuzzification, and rule metrics.

The pipeline turns three role-bound streams into linguistic rules of the
form (trigger1, trigger2) => (elapsed-time, consequence):

1. extract every event triple that satisfies the two time windows,
2. classify each triple's values into linguistic labels, producing one
   weighted instance per label combination (weight = product of the four
   membership degrees),
3. accumulate instances into rules and compute each rule's support
   (weight over the combined weight of all rules) and confidence (weight
   over the combined weight of rules sharing its trigger pair).

Everything here is pure and deterministic; rule sets are immutable.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import product
from math import isfinite
from typing import NamedTuple

from .errors import UndefinedMetricError
from .fuzzy import Vocabulary, classify


@dataclass(frozen=True)
class WindowConfig:
    """Maximum allowed spacings between the events of one association.

    ``trigger_window`` bounds the time from the trigger-1 event to the
    trigger-2 event; ``consequence_window`` bounds the time from the
    trigger-2 event to the consequence event. Both windows are closed:
    an event landing exactly on the boundary is included.
    """

    trigger_window: float
    consequence_window: float

    def __post_init__(self):
        for name in ("trigger_window", "consequence_window"):
            value = getattr(self, name)
            if not (isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive and finite, got {value}")


@dataclass(frozen=True)
class NumericalAssociation:
    """One extracted event triple, before any classification.

    ``v1``/``v2``/``v3`` are the event values, ``delta_t`` the elapsed
    time from the trigger-2 event to the consequence event, and
    ``t1``/``t2``/``t3`` the source timestamps kept for provenance.
    """

    v1: float
    v2: float
    delta_t: float
    v3: float
    t1: float
    t2: float
    t3: float


class RuleInstance(NamedTuple):
    """One weighted linguistic reading of a numerical association."""

    l1: str
    l2: str
    l_dt: str
    l3: str
    weight: float


@dataclass(frozen=True)
class FuzzyRule:
    """An aggregated linguistic rule with its accumulated metrics."""

    l1: str
    l2: str
    l_dt: str
    l3: str
    weight: float
    support: float
    confidence: float

    @property
    def labels(self):
        return (self.l1, self.l2, self.l_dt, self.l3)


@dataclass(frozen=True)
class RuleSet:
    """Aggregated rules plus the weight totals their metrics divide by.

    ``total_weight`` is the combined weight of all aggregated instances
    and ``trigger_weights`` maps each (l1, l2) pair to the combined
    weight of its rules. A thresholded rule set (see
    :func:`apply_thresholds`) keeps the pre-pruning totals, so surviving
    rules retain the metrics they were filtered on.
    """

    rules: tuple
    total_weight: float
    trigger_weights: dict

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def find(self, l1, l2, l_dt, l3):
        """The rule with these labels, or None."""
        for rule in self.rules:
            if rule.labels == (l1, l2, l_dt, l3):
                return rule
        return None


@dataclass(frozen=True)
class MiningConfig:
    """Everything one mining run needs besides the streams themselves."""

    windows: WindowConfig
    vocab_t1: Vocabulary
    vocab_t2: Vocabulary
    vocab_dt: Vocabulary
    vocab_c: Vocabulary
    min_support: float = 0.0
    min_confidence: float = 0.0

    def __post_init__(self):
        for name in ("min_support", "min_confidence"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")


def extract_numerical(bundle, windows):
    """Enumerate every event triple allowed by the windows.

    A triple (e1, e2, e3) qualifies when e2 falls within the trigger
    window after e1 (e1.t <= e2.t <= e1.t + trigger_window) and e3 falls
    within the consequence window after e2. Enumeration is exhaustive:
    one event may participate in any number of associations, and one
    trigger pair may yield several. Output is ordered by (t1, t2, t3).
    """
    t2_events = bundle.trigger2.events
    t3_events = bundle.consequence.events
    t2_times = [e.timestamp for e in t2_events]
    t3_times = [e.timestamp for e in t3_events]
    out = []
    for e1 in bundle.trigger1.events:
        lo2 = bisect_left(t2_times, e1.timestamp)
        hi2 = bisect_right(t2_times, e1.timestamp + windows.trigger_window)
        for e2 in t2_events[lo2:hi2]:
            lo3 = bisect_left(t3_times, e2.timestamp)
            hi3 = bisect_right(t3_times, e2.timestamp + windows.consequence_window)
            for e3 in t3_events[lo3:hi3]:
                out.append(NumericalAssociation(
                    v1=e1.value, v2=e2.value,
                    delta_t=e3.timestamp - e2.timestamp, v3=e3.value,
                    t1=e1.timestamp, t2=e2.timestamp, t3=e3.timestamp))
    return out


def fuzzify(assoc, cfg):
    """Expand one association into weighted linguistic instances.

    Takes the cartesian product of the four classifications; each
    combination weighs the product of its membership degrees. Zero
    factors never occur because classification omits zero-degree labels,
    and if any dimension classifies to nothing the result is empty: the
    association then contributes no weight at all.
    """
    c1 = classify(cfg.vocab_t1, assoc.v1)
    c2 = classify(cfg.vocab_t2, assoc.v2)
    c_dt = classify(cfg.vocab_dt, assoc.delta_t)
    c3 = classify(cfg.vocab_c, assoc.v3)
    return [
        RuleInstance(l1, l2, l_dt, l3, m1 * m2 * m_dt * m3)
        for (l1, m1), (l2, m2), (l_dt, m_dt), (l3, m3) in product(c1, c2, c_dt, c3)
    ]


def aggregate(instances):
    """Accumulate weighted instances into a rule set with metrics.

    Weights of identical label tuples add up; support and confidence are
    populated from the resulting totals. Rules are ordered by descending
    weight, then lexicographically by label tuple, and the trigger pairs
    are distinct keys in their stream-bound order: (Small, Medium) and
    (Medium, Small) are different triggers.
    """
    weights = {}
    trigger_weights = {}
    total_weight = 0.0
    for l1, l2, l_dt, l3, weight in instances:
        key = (l1, l2, l_dt, l3)
        pair = (l1, l2)
        weights[key] = weights.get(key, 0.0) + weight
        trigger_weights[pair] = trigger_weights.get(pair, 0.0) + weight
        total_weight += weight

    ordered = sorted(weights, key=lambda key: (-weights[key], key))
    rules = tuple(
        FuzzyRule(*key, weight=weights[key],
                  support=weights[key] / total_weight,
                  confidence=weights[key] / trigger_weights[key[:2]])
        for key in ordered
    )
    return RuleSet(rules=rules, total_weight=total_weight,
                   trigger_weights=trigger_weights)


def support(ruleset, rule):
    """The rule's weight relative to the combined weight of all rules."""
    if ruleset.total_weight == 0:
        raise UndefinedMetricError(
            "support is undefined on a rule set with zero total weight")
    return rule.weight / ruleset.total_weight


def confidence(ruleset, rule):
    """The rule's weight relative to the rules sharing its trigger pair."""
    return rule.weight / ruleset.trigger_weights[(rule.l1, rule.l2)]


def apply_thresholds(ruleset, min_support, min_confidence):
    """Keep only rules meeting both thresholds.

    Metrics are not recomputed: the surviving rules keep the support and
    confidence they had before pruning, and the returned set carries the
    pre-pruning weight totals.
    """
    kept = tuple(
        rule for rule in ruleset.rules
        if rule.support >= min_support and rule.confidence >= min_confidence
    )
    return RuleSet(rules=kept, total_weight=ruleset.total_weight,
                   trigger_weights=dict(ruleset.trigger_weights))


def mine(bundle, cfg):
    """Run the full pipeline: extract, fuzzify, aggregate, threshold."""
    instances = []
    for assoc in extract_numerical(bundle, cfg.windows):
        instances.extend(fuzzify(assoc, cfg))
    ruleset = aggregate(instances)
    return apply_thresholds(ruleset, cfg.min_support, cfg.min_confidence)
