import os
from dataclasses import dataclass, replace
from typing import Dict, Any
from dotenv import load_dotenv

load_dotenv()

@dataclass(frozen=True)
class NumericsConfig:
    """Tolerances and budgets for the numerical oracles"""
    tol: float
    borderline: float
    lp_eps: float
    max_degree: int
    eigen_max_n: int
    poly_max_degree: int
    root_max_iter: int
    pivot_budget: int

    def degree_for(self, n: int) -> int:
        """LP degree cap for an n x n matrix (0 means n - 1)"""
        return self.max_degree if self.max_degree > 0 else n - 1

@dataclass(frozen=True)
class SamplingConfig:
    """Seeded sampling of pattern classes"""
    seed: int
    samples: int
    recipe_samples: int
    magnitude_low: float
    magnitude_high: float
    workers: int

@dataclass(frozen=True)
class OutputConfig:
    """Report and logging output"""
    output_directory: str
    report_format: str
    log_file: str
    log_level: str
    strict: bool
    show_progress: bool

_SECTIONS = {
    "numerics": NumericsConfig,
    "sampling": SamplingConfig,
    "output": OutputConfig,
}

class Config:
    """Main configuration class"""

    def __init__(self):
        self.numerics = NumericsConfig(
            tol=float(os.getenv('ALGPOS_TOL', '1e-9')),
            borderline=float(os.getenv('ALGPOS_BORDERLINE', '1e-6')),
            lp_eps=float(os.getenv('ALGPOS_LP_EPS', '1e-9')),
            max_degree=int(os.getenv('ALGPOS_MAX_DEGREE', '0')),
            eigen_max_n=int(os.getenv('ALGPOS_EIGEN_MAX_N', '8')),
            poly_max_degree=int(os.getenv('ALGPOS_POLY_MAX_DEGREE', '16')),
            root_max_iter=int(os.getenv('ALGPOS_ROOT_MAX_ITER', '500')),
            pivot_budget=int(os.getenv('ALGPOS_PIVOT_BUDGET', '500'))
        )

        self.sampling = SamplingConfig(
            seed=int(os.getenv('ALGPOS_SEED', '20240611')),
            samples=int(os.getenv('ALGPOS_SAMPLES', '200')),
            recipe_samples=int(os.getenv('ALGPOS_RECIPE_SAMPLES', '100')),
            magnitude_low=float(os.getenv('ALGPOS_MAGNITUDE_LOW', '1e-2')),
            magnitude_high=float(os.getenv('ALGPOS_MAGNITUDE_HIGH', '1e2')),
            workers=int(os.getenv('ALGPOS_WORKERS', '4'))
        )

        self.output = OutputConfig(
            output_directory=os.getenv('ALGPOS_OUTPUT_DIR', './output'),
            report_format=os.getenv('ALGPOS_REPORT_FORMAT', 'json'),
            log_file=os.getenv('ALGPOS_LOG_FILE', ''),
            log_level=os.getenv('ALGPOS_LOG_LEVEL', 'INFO').upper(),
            strict=os.getenv('ALGPOS_STRICT', 'false').lower() == 'true',
            show_progress=os.getenv('ALGPOS_SHOW_PROGRESS', 'true').lower() == 'true'
        )

    def override(self, **values: Any) -> "Config":
        """Return a copy with the given ``section.field`` or bare field values applied"""
        updated = Config.__new__(Config)
        sections = {name: getattr(self, name) for name in _SECTIONS}

        for key, value in values.items():
            if value is None:
                continue
            section_name, _, field_name = key.rpartition('.')
            if not section_name:
                section_name = self._section_of(field_name)
            sections[section_name] = replace(sections[section_name], **{field_name: value})

        for name, section in sections.items():
            setattr(updated, name, section)
        return updated

    @staticmethod
    def _section_of(field_name: str) -> str:
        for name, cls in _SECTIONS.items():
            if field_name in cls.__dataclass_fields__:
                return name
        raise KeyError(f"Unknown configuration field: {field_name}")

    def validate(self) -> Dict[str, str]:
        """Validate configuration and return any errors"""
        errors = {}

        if self.numerics.tol <= 0:
            errors['tol'] = 'Tolerance must be positive'

        if self.numerics.borderline <= 0 or self.numerics.borderline < self.numerics.tol:
            errors['borderline'] = 'Borderline band must be positive and at least tol'

        if self.numerics.lp_eps <= 0:
            errors['lp_eps'] = 'LP margin threshold must be positive'

        if self.numerics.max_degree < 0:
            errors['max_degree'] = 'Max degree must be non-negative'

        if self.numerics.eigen_max_n < 2:
            errors['eigen_max_n'] = 'Eigen dimension cap must be at least 2'

        if self.sampling.samples < 2:
            errors['samples'] = 'Samples must be at least 2'

        if self.sampling.recipe_samples < 1:
            errors['recipe_samples'] = 'Recipe samples must be positive'

        if not 0 < self.sampling.magnitude_low < self.sampling.magnitude_high:
            errors['magnitude_range'] = 'Magnitude range must satisfy 0 < low < high'

        if self.sampling.workers < 1:
            errors['workers'] = 'Workers must be positive'

        if self.output.report_format not in ('json', 'md'):
            errors['report_format'] = 'Report format must be json or md'

        return errors
