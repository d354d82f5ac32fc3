"""Full-size runs of the oracle, closure, B_A and atlas checks (pytest --run-slow)"""
import os
from itertools import product
from unittest.mock import patch

import numpy as np
import pytest

from src.atlas.builder import build_atlas
from src.classify.table import default_table
from src.config.config import Config
from src.engine.closure import ClosureTransform, closure_transform
from src.engine.oracles import DEFAULT_NUMERICS, eigen_ap_check, is_ap
from src.models.enums import Agreement, DiscrepancyKind
from src.models.pattern import SignPattern
from src.patterns.algebra import sample, theorem4_excludes

pytestmark = pytest.mark.slow

BAND = 1e-6

def random_matrices(count, sizes, seed, profile=(0.1, 10.0)):
    rng = np.random.default_rng(seed)
    for k in range(count):
        n = sizes[k % len(sizes)]
        S = SignPattern(n, tuple(int(c) for c in rng.integers(-1, 2, size=n * n)))
        yield sample(S, rng, profile)

def decisive(verdict):
    margins = verdict.margins
    return (not verdict.borderline and abs(margins['eigen_min_entry']) >= BAND
            and margins['eigen_gap'] >= BAND and abs(margins['lp_t']) >= BAND)

class TestOracleScale:
    """Oracle agreement and closure invariance on thousands of seeded matrices"""

    def test_cross_validation(self):
        hard, borderline = [], 0
        for X in random_matrices(2000, (3, 4), seed=2000):
            verdict = is_ap(X, DEFAULT_NUMERICS)
            if verdict.agreement in (Agreement.EIGEN_ONLY, Agreement.POLY_ONLY):
                hard.append(X.to_text())
            elif verdict.agreement == Agreement.BORDERLINE:
                borderline += 1

        assert hard == []
        assert borderline < 20

    def test_closure_invariance(self):
        violations = []
        for X in random_matrices(1000, (2, 3, 4), seed=1000):
            base = is_ap(X)
            if not decisive(base):
                continue
            transforms = [ClosureTransform.transpose(), ClosureTransform.negate(),
                          ClosureTransform.perm_sim(tuple(reversed(range(X.n))))]
            transforms += [ClosureTransform.affine(alpha, beta)
                           for alpha in (-1.0, 0.0, 3.0) for beta in (0.5, -0.5, 2.0)]
            for which in transforms:
                moved = is_ap(closure_transform(X, which))
                if decisive(moved) and moved.is_ap != base.is_ap:
                    violations.append((X.to_text(), which))
        assert violations == []

class TestBMatrixExclusion:
    def test_no_ap_member_in_excluded_patterns(self):
        """Test 200 draws of every excluded 3x3 pattern stay non-AP"""
        rng = np.random.default_rng(4)
        excluded = violations = 0
        for cells in product((-1, 0, 1), repeat=9):
            S = SignPattern(3, cells)
            if not theorem4_excludes(S):
                continue
            excluded += 1
            for _ in range(200):
                if eigen_ap_check(sample(S, rng)) is not None:
                    violations += 1

        assert excluded > 0
        assert violations == 0

class TestAtlasScale:
    def test_default_sample_count(self, tmp_path):
        """Test non-suspect rows agree with the engine at samples=200"""
        with patch.dict(os.environ, {}, clear=True):
            cfg = Config().override(show_progress=False, output_directory=str(tmp_path))
        report = build_atlas(cfg)
        suspects = {entry.id for entry in default_table().suspect_entries()}
        contradicted = {
            d.entry_id for d in report.discrepancies
            if d.kind in (DiscrepancyKind.LABEL_CONTRADICTION, DiscrepancyKind.THEORY_CONFLICT)
        }

        assert cfg.sampling.samples == 200
        assert report.table_misses == []
        assert report.soundness_violations == []
        assert contradicted <= suspects
