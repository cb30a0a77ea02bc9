"""Base-related statistics and relational complexity of finite
permutation groups, with machine-checkable certificates.

Layers: perm/group (permutations, Schreier-Sims chains), algebra
(finite fields, linear algebra, Gaussian binomials), actions (concrete
instance constructions), stats (b, B, H, I, len searches), rc
(relational complexity), catalog + checks (named instances, registered
claims, suite reports), cli (the grpstat entry point).
"""

from .perm import Perm, PermError, format_group_text, parse_group_text
from .group import PermGroup
from .actions import (
    ActionInstance,
    ActionsError,
    act_affine,
    act_diagonal,
    act_k_subsets,
    act_m24,
    act_natural,
    act_partitions,
    act_product,
    act_quadratic_forms,
    act_subspace_pairs,
    act_subspaces,
)
from .stats import (
    BudgetExceeded,
    NodeBudget,
    StatCertificate,
    StatsError,
    quotient_regular,
    stat_B,
    stat_H,
    stat_I,
    stat_b,
    stat_len,
    verify_certificate,
)
from .rc import RCResult, RcError, r_equivalent, rc_exact, rc_upper, transporter
from .catalog import CatalogError, build, catalog, entry_ids
from .checks import CHECK_IDS, CheckResult, SuiteConfig, run_suite, verify

__version__ = "0.1.0"

__all__ = [
    "Perm", "PermError", "format_group_text", "parse_group_text",
    "PermGroup",
    "ActionInstance", "ActionsError", "act_affine", "act_diagonal",
    "act_k_subsets", "act_m24", "act_natural", "act_partitions",
    "act_product", "act_quadratic_forms", "act_subspace_pairs",
    "act_subspaces",
    "BudgetExceeded", "NodeBudget", "StatCertificate", "StatsError",
    "quotient_regular", "stat_B", "stat_H", "stat_I", "stat_b",
    "stat_len", "verify_certificate",
    "RCResult", "RcError", "r_equivalent", "rc_exact", "rc_upper",
    "transporter",
    "CatalogError", "build", "catalog", "entry_ids",
    "CHECK_IDS", "CheckResult", "SuiteConfig", "run_suite", "verify",
    "__version__",
]
