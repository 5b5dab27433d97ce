"""Shared fixture data: the quickstart example in code and on disk."""

from pathlib import Path

from fuzzmine import (
    Event,
    EventStream,
    FuzzyInterval,
    MiningConfig,
    StreamBundle,
    Vocabulary,
    WindowConfig,
)

REPO_ROOT = Path(__file__).resolve().parents[1]
QUICKSTART_CSV = REPO_ROOT / "quickstart" / "streams.csv"
QUICKSTART_CONFIG = REPO_ROOT / "quickstart" / "config.json"

# The quickstart rule set, keyed by label tuple:
# (trigger1, trigger2, delta_t, consequence) -> (weight, support, confidence)
QUICKSTART_RULES = {
    ("Small Volume", "Medium Volume", "Short Time After", "Medium Volume"):
        (0.5, 1 / 6, 0.25),
    ("Small Volume", "Medium Volume", "Short Time After", "Large Volume"):
        (0.5, 1 / 6, 0.25),
    ("Small Volume", "Medium Volume", "Long Time After", "Large Volume"):
        (1.0, 1 / 3, 0.5),
    ("Medium Volume", "Small Volume", "Long Time After", "Medium Volume"):
        (1.0, 1 / 3, 1.0),
}


def volume_vocab(name="volume"):
    return Vocabulary(name, (
        FuzzyInterval("Small Volume", 0, 0, 3, 6),
        FuzzyInterval("Medium Volume", 3, 6, 9, 12),
        FuzzyInterval("Large Volume", 9, 12, 15, 15),
    ))


def timing_vocab(name="timing"):
    return Vocabulary(name, (
        FuzzyInterval("Immediately After", 0, 0, 1, 3),
        FuzzyInterval("Short Time After", 1, 3, 5, 7),
        FuzzyInterval("Long Time After", 5, 7, 10, 10),
    ))


def quickstart_bundle():
    """The quickstart streams, built in code (independent of the CSV)."""
    return StreamBundle(
        trigger1=EventStream("stream1", (Event(0, 2), Event(1000, 7))),
        trigger2=EventStream("stream2", (Event(3, 8), Event(1003, 2))),
        consequence=EventStream("stream3",
                                (Event(7, 10.5), Event(13, 15), Event(1013, 7))),
    )


def quickstart_mining_config(min_support=0.0, min_confidence=0.0):
    return MiningConfig(
        windows=WindowConfig(trigger_window=10, consequence_window=10),
        vocab_t1=volume_vocab("trigger1"),
        vocab_t2=volume_vocab("trigger2"),
        vocab_dt=timing_vocab("delta_t"),
        vocab_c=volume_vocab("consequence"),
        min_support=min_support,
        min_confidence=min_confidence,
    )
