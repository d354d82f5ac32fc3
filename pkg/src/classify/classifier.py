"""Rule cascade classifying a sign pattern as RAP, AAP or DNA.

Theory stages (irreducibility, the row/column sign test, the B_A test and
uniform off-diagonal signs) work for any n. Table lookup applies to 3x3
patterns; whatever is left is sampled through the spectral oracle.
"""
import logging
from typing import Optional

from ..config.config import Config
from ..engine.oracles import eigen_ap_check
from ..exceptions.custom_exceptions import TableMiss, ValidationError
from ..graphs.digraph import digraph_of, reducing_partition
from ..models.classification import Classification, Evidence
from ..models.enums import EvidenceKind, Verdict
from ..models.pattern import SignPattern
from ..patterns.algebra import (
    b_matrix,
    row_col_necessary,
    sample,
    theorem4_excludes,
    uniform_offdiag,
)
from ..utils.helpers import SeedLike, make_rng
from .table import ClassifierTable, default_table

logger = logging.getLogger(__name__)

TABLE_N = 3

def _partition_detail(S: SignPattern) -> dict:
    first, second = reducing_partition(digraph_of(S))
    return {'first': sorted(first), 'second': sorted(second)}

def classify(S: SignPattern, cfg: Optional[Config] = None, table: Optional[ClassifierTable] = None,
             seed: Optional[SeedLike] = None, strict: Optional[bool] = None) -> Classification:
    if S.n < 2:
        raise ValidationError("Classification needs a pattern of dimension at least 2")
    cfg = cfg or Config()
    strict = cfg.output.strict if strict is None else strict

    G = digraph_of(S)
    partition = reducing_partition(G)
    if partition is not None:
        first, second = partition
        return Classification(S, Verdict.DNA, Evidence(
            EvidenceKind.REDUCIBLE, {'first': sorted(first), 'second': sorted(second)}
        ))

    if not row_col_necessary(S):
        return Classification(S, Verdict.DNA, Evidence(EvidenceKind.ROW_COL_FAIL))

    if theorem4_excludes(S):
        B = b_matrix(S)
        detail = {'b_matrix': B.to_text()}
        detail.update(_partition_detail(B))
        return Classification(S, Verdict.DNA, Evidence(EvidenceKind.THEOREM4, detail))

    if uniform_offdiag(S):
        return Classification(S, Verdict.RAP, Evidence(EvidenceKind.UNIFORM_OFFDIAG))

    if S.n == TABLE_N:
        table = table or default_table()
        match = table.match_entry(S)
        if match is not None:
            entry, transform = match
            kind = EvidenceKind.RECIPE if entry.recipe is not None and entry.label == Verdict.RAP \
                else EvidenceKind.TABLE
            return Classification(S, entry.label, Evidence(kind, {
                'entry_id': entry.id,
                'transform': transform.to_dict(),
                'suspect': entry.suspect,
            }), entry_id=entry.id)
        if strict:
            logger.error(f"No table entry covers irreducible pattern {S}")
            raise TableMiss(f"No table entry covers irreducible pattern {S}", pattern=S.to_text())
        logger.warning(f"No table entry covers {S}; falling back to sampling")

    return classify_by_sampling(S, cfg, seed)

def classify_by_sampling(S: SignPattern, cfg: Optional[Config] = None,
                         seed: Optional[SeedLike] = None) -> Classification:
    """Seeded draws from Q(S) through the spectral oracle; only SampledBoth is a proof"""
    cfg = cfg or Config()
    numerics, sampling = cfg.numerics, cfg.sampling
    rng = make_rng(sampling.seed if seed is None else seed)
    profile = (sampling.magnitude_low, sampling.magnitude_high)

    ap_witness = non_ap_witness = None
    ap_count = 0
    for _ in range(sampling.samples):
        X = sample(S, rng, profile)
        certificate = eigen_ap_check(X, numerics.tol, numerics.eigen_max_n, numerics.root_max_iter)
        if certificate is not None:
            ap_count += 1
            if ap_witness is None:
                ap_witness = X
        elif non_ap_witness is None:
            non_ap_witness = X
        if ap_witness is not None and non_ap_witness is not None:
            return Classification(S, Verdict.AAP, Evidence(EvidenceKind.SAMPLED_BOTH, {
                'ap_witness': ap_witness.to_list(),
                'non_ap_witness': non_ap_witness.to_list(),
            }))

    if ap_count:
        logger.warning(f"All {ap_count} samples of {S} are AP; RAP is not proven")
        return Classification(S, Verdict.RAP, Evidence(EvidenceKind.SAMPLED_ALL_AP, {'count': ap_count}))
    logger.warning(f"No AP sample among {sampling.samples} draws of {S}; DNA is not proven")
    return Classification(S, Verdict.DNA, Evidence(EvidenceKind.SAMPLED_NONE_AP, {'count': sampling.samples}))
