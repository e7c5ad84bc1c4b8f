"""argeo: a structured-argumentation workbench.

Two engines over one rule language — tree-structured arguments with
rebut-style attacks and Dung semantics, and derivation-based arguments
with dialectical-tree marking — plus the mappings between them,
rationality audits, a grounded dialogue game, and a query CLI.
"""

from .afsem import (
    Framework,
    Mode,
    Semantics,
    defends,
    extensions,
    format_framework,
    framework_to_dot,
    grounded,
    is_admissible,
    is_conflict_free,
    justified,
    make_framework,
    parse_framework,
)
from .aspic import (
    AspicArgument,
    Attack,
    AttackKind,
    StructuredFramework,
    attack_witnesses,
    build_framework,
    build_structured,
    construct_arguments,
    dlprebut_witnesses,
    inference_argument,
    premise_argument,
    rebut_witnesses,
    urebut_witnesses,
)
from .correspondence import (
    EquivalenceReport,
    Pairing,
    SimplifiedViolation,
    a_rebut_witnesses,
    aspic_to_delp,
    delp_to_aspic,
    is_simplified,
    ua_rebut_witnesses,
    verify_equivalence,
)
from .delp import (
    Counterargument,
    DefeatKind,
    Defeater,
    DelpArgument,
    Derivation,
    LineEntry,
    Mark,
    Step,
    StepKind,
    TreeNode,
    acceptable_extension,
    build_tree,
    concordant,
    counterarguments,
    defeater_kind,
    defeaters,
    delp_arguments,
    derive,
    disagree,
    format_derivation,
    has_strict_derivation,
    make_argument,
    subarguments_at,
    tree_to_dot,
    tree_to_text,
    trees,
    warrant,
    warranted_literals,
)
from .delp_gr import (
    delp_framework,
    grounded_arguments,
    native_witnesses,
    warrant_gr,
    warranted_literals_gr,
)
from .errors import (
    ArgeoError,
    BudgetExceededError,
    EngineError,
    FrameworkTooLargeError,
    NotSimplifiedError,
    ParseError,
    PriorityMissingError,
)
from .game import (
    Game,
    Move,
    Player,
    StrategyNode,
    provably_justified,
    strategy_to_dot,
    strategy_to_text,
)
from .lang import (
    Literal,
    OrderingMode,
    Program,
    Rule,
    RuleKind,
    complementary_pairs,
    format_program,
    forward_closure,
    is_directly_consistent,
    is_indirectly_consistent,
    make_program,
    parse_literal,
    parse_program,
    strict_closure,
    transpose,
    validate_program,
)
from .orderings import (
    ExplicitOrdering,
    LastLinkOrdering,
    Ordering,
    Relation,
    SimpleOrdering,
    StrengthKey,
    ordering_for,
)
from .postulates import (
    AuditResult,
    ExtensionAudit,
    audit_aspic,
    audit_conclusions,
    audit_delp,
    audit_delp_gr,
)

__version__ = "0.1.0"
