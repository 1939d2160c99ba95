"""Redundant-frame screening for capsule endoscopy sequences."""

try:
    from ._core import (
        __version__,
        er_rate,
        estimate_play_time,
        evaluate,
        screen_directory,
        subjective_reduction_ratio,
        sweep_directory,
        synthesize,
    )
except ImportError:  # development layout: extension on sys.path, not in-package
    from _core import (
        __version__,
        er_rate,
        estimate_play_time,
        evaluate,
        screen_directory,
        subjective_reduction_ratio,
        sweep_directory,
        synthesize,
    )

__all__ = [
    "__version__",
    "er_rate",
    "estimate_play_time",
    "evaluate",
    "screen_directory",
    "subjective_reduction_ratio",
    "sweep_directory",
    "synthesize",
]
