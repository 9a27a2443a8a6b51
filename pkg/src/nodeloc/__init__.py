"""Identifiability analysis for node-failure localization in monitored networks.

Given an undirected topology whose nodes are split into monitors and
non-monitors, this package decides how many simultaneous non-monitor
failures can be unambiguously localized from Boolean end-to-end path
measurements, under three probing regimes:

* CAP, controllable arbitrary-path probing (monitor-anchored walks),
* CSP, controllable simple-path probing (cycle-free monitor-to-monitor paths),
* UP, uncontrollable probing over a fixed externally given path set.

Polynomial-time sufficient/necessary conditions live in
:mod:`nodeloc.conditions`; the exhaustive ground-truth engine that every
condition is verified against lives in :mod:`nodeloc.oracle`.
"""

from .auxgraph import (
    AuxiliaryGraph,
    AuxKind,
    merge_monitors,
    merge_monitors_leaving_out,
    min_leave_one_out_connectivity,
)
from .conditions import (
    Identifiability,
    IdentifiabilityBounds,
    Verdict,
    cap_bounds,
    cap_verdict,
    cap_verdicts,
    csp_bounds,
    csp_verdict,
    csp_verdicts,
    up_bounds,
    up_verdict,
    up_verdicts,
)
from .ensemble import (
    INFINITE_COVER,
    CoverProfile,
    MeasurementPath,
    PathEnsemble,
    build_ensemble,
    cover_profile,
    min_cover_size,
)
from .errors import (
    CapacityError,
    FormatError,
    InputError,
    InternalError,
    NodelocError,
    UsageError,
)
from .graph import (
    ComponentPartition,
    Topology,
    connected_components,
    is_k_connected,
    max_disjoint_paths,
    neighborhood_of_set,
    vertex_connectivity,
)
from .document import (
    TopologyDocument,
    emit_outcomes,
    emit_topology,
    parse_outcomes,
    parse_topology,
)
from .generate import barabasi_albert, erdos_renyi, generate_paths, generate_topology, grid
from .oracle import (
    ANY_MONITOR,
    CAP,
    CSP,
    DEFAULT_GUARD,
    DistinguishingPath,
    FailureSet,
    IndistinguishablePair,
    ProbingModel,
    UnprobeableNode,
    Witness,
    abstract_necessary,
    abstract_sufficient,
    distinguishable,
    exhaustive_component_condition,
    find_measurable_path,
    k_identifiable,
    localize,
    max_identifiability,
    measurable_path_exists,
    restrict,
    simulate_measurements,
    up_model,
)
from .report import AnalysisReport, ModelSection, analyze, emit_report, reformat_report

from ._version import __version__

__all__ = [name for name in dir() if not name.startswith("_")]
