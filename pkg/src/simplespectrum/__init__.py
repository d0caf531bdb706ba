"""Exact and empirical verification of spectral simplicity for discrete
random symmetric matrices."""

from .dist import (
    AtomicDistribution,
    bernoulli_half,
    make_distribution,
    nontriviality_margin,
    rademacher,
    zero_atom,
)
from .gaps import Gap, contains, enumerate_members, full_rank_reduce, is_proper, volume
from .harness import (
    CensusResult,
    ExperimentSummary,
    exhaustive_census,
    monte_carlo_simplicity,
    rich_eigenvector_frequency,
    verify_orthogonality_lemma,
    wilson_interval,
)
from .matrices import (
    EnsembleSpec,
    MinorSplit,
    SymmetricMatrix,
    graph_from_index,
    minor_decompose,
    sample_matrix,
    trial_rng,
)
from .smallball import (
    SmallBallResult,
    WeightVector,
    is_rich,
    small_ball_exact,
    small_ball_windowed,
)
from .spectrum import (
    CharPoly,
    NumericSpectrum,
    SimplicityVerdict,
    char_poly,
    eigen_decompose,
    multiplicity_clusters,
    simplicity_exact,
    simplicity_numeric,
)
from .structure import (
    StructureParams,
    StructureReport,
    find_covering_gap,
    refine_structure,
    verify_report,
)

__version__ = "0.1.0"
