"""Three-stage network intrusion detection (C++ core)."""

from ._nids import (
    NidsError,
    __version__,
    adasyn,
    base_log_loss,
    class_priors,
    cluster_filter,
    fit_kmeans,
    ganomaly_scores,
    ocsvm_scores,
    rank_auc,
    roc_auc,
    run,
    scale_scores,
    tpr_fpr,
)

__all__ = [
    "NidsError",
    "__version__",
    "adasyn",
    "base_log_loss",
    "class_priors",
    "cluster_filter",
    "fit_kmeans",
    "ganomaly_scores",
    "ocsvm_scores",
    "rank_auc",
    "roc_auc",
    "run",
    "scale_scores",
    "tpr_fpr",
]
