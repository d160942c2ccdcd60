"""Scanpath generation and comparison toolkit."""

from ._gazebench import (  # noqa: F401
    Fixation,
    IdtParams,
    MetricParams,
    RecurrenceMatrix,
    SaliencyMap,
    SamplerConfig,
    Scanpath,
    cross_recurrence,
    denormalize_point,
    detect_fixations,
    determinism,
    dtw,
    eyenalysis,
    laminarity,
    load_saliency_map,
    normalize_point,
    sample_center_baseline,
    sample_ior,
    sample_probabilistic,
    truncate_scanpath,
)

__version__ = "0.1.0"
