from .globalsyn import (
    ConjugationFragment,
    GlobalRun,
    conjugate_step,
    reduce_paired_step,
    run_global,
    synthesize_global,
)
from .householder import (
    EmbeddedOperator,
    Reflection,
    embed,
    fixed_vectors,
    householder_factors,
    householder_target,
    reflection_vectors,
    synthesize_householder,
    synthesize_reflection,
)
from .local import (
    QuadrupleStep,
    column_cost_bound,
    local_cost_envelope,
    reduce_column,
    reduce_quadruple,
    synthesize_local,
)
from .rewrite import (
    RewriteRule,
    adjacent_transpositions,
    check_relations,
    eliminate_ih_pairs,
    rewrite_blowup,
    rewrite_rules,
)

__all__ = [
    "ConjugationFragment", "GlobalRun", "conjugate_step", "reduce_paired_step",
    "run_global", "synthesize_global",
    "EmbeddedOperator", "Reflection", "embed", "fixed_vectors", "householder_factors",
    "householder_target", "reflection_vectors", "synthesize_householder",
    "synthesize_reflection",
    "QuadrupleStep", "column_cost_bound", "local_cost_envelope", "reduce_column",
    "reduce_quadruple", "synthesize_local",
    "RewriteRule", "adjacent_transpositions", "check_relations", "eliminate_ih_pairs",
    "rewrite_blowup", "rewrite_rules",
]
