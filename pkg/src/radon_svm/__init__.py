"""Hard-margin SVMs, their support-vector configurations and Radon points."""

from .geometry import (HullWitness, RadonCertificate, Verdict, hulls_intersect, in_general_position,
                       radon_partition, unique_radon_partition)
from .radon import (ConfigurationReport, PrecisionAudit, classify_configuration, perturbation_stability,
                    precision_audit, radon_point_from_duals, shatter_check)
from .svm import (LabeledPointSet, NotSeparableError, SvmSolution, brute_force_train, kkt_check,
                  support_vectors, train_hard_margin)

__all__ = [
    "ConfigurationReport", "HullWitness", "LabeledPointSet", "NotSeparableError", "PrecisionAudit",
    "RadonCertificate", "SvmSolution", "Verdict", "brute_force_train", "classify_configuration",
    "hulls_intersect", "in_general_position", "kkt_check", "perturbation_stability", "precision_audit",
    "radon_partition", "radon_point_from_duals", "shatter_check", "support_vectors",
    "train_hard_margin", "unique_radon_partition",
]
__version__ = "0.1.0"
