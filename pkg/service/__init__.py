# service/__init__.py

from .errors import (
    DegenerateList,
    InstanceTooLargeError,
    InternalInvariantViolation,
    InvalidSpanError,
    MissingList,
    MwisBudgetExceeded,
    NoAugmentingPath,
    NonUniformSpan,
    RegularGenerationError,
)
from .export import to_dot
from .fuzz import FuzzConfig, FuzzReport, check_instance, fuzz_campaign, generate_instances, shrink_instance
from .levels import LevelDecomposition, LevelRecord, build_levels, check_span, target_set, validate_levels
from .mwis import is_dominating, mwis_bruteforce, mwis_exact, phi_maximum_set, set_weight
from .oracle import OracleResult, exhaustive_offsets, gen_named, gen_random, gen_regular
from .report import Check, Report, VerificationReport
from .verify import verify_list_membership, verify_offsets, verify_proper
from .weighting import (
    OffsetWeighting,
    RunState,
    RunTrace,
    VertexStatus,
    replay_trace,
    solve_lists,
    solve_offsets,
    split_lists,
    vertex_status,
)
from .wellgraph import (
    StarForest,
    WellInstance,
    check_preconditions,
    enumerate_well_subgraphs,
    find_well_subgraph,
    hall_condition_holds,
    improving_set,
    verify_well,
)
