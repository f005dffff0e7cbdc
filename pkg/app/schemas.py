from pydantic import BaseModel, Field, field_validator
from typing import Dict, List, Optional
from enum import Enum


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class CharacterSide(str, Enum):
    EULER = "euler"
    RHS = "rhs"


class LambdaSpec(BaseModel):
    """Command-line / query encoding of a parameter: '0' or 'hat=<index|0>,s=<c1,...,cl>'"""

    hat: int = Field(0, ge=0, examples=[0], description="0 or the index i of a minuscule fundamental weight")
    s: Optional[List[int]] = Field(None, examples=[[0, 1]], description="Box vector, entries in [0, p-1]; omitted means all zeros")

    @field_validator('s')
    @classmethod
    def validate_s(cls, v: Optional[List[int]]) -> Optional[List[int]]:
        if v is not None and any(c < 0 for c in v):
            raise ValueError(f"s entries must be non-negative, got {v}")
        return v

    @classmethod
    def parse(cls, text: str) -> "LambdaSpec":
        text = text.strip()
        if text == "0":
            return cls()
        hat, s = 0, None
        head, sep, tail = text.partition("s=")
        for part in filter(None, (p.strip() for p in head.split(","))):
            key, _, value = part.partition("=")
            if key.strip() != "hat" or not value.strip().lstrip("-").isdigit():
                raise ValueError(f"Invalid lambda specification: {text!r}")
            hat = int(value)
        if sep:
            try:
                s = [int(c) for c in tail.split(",") if c.strip()]
            except ValueError:
                raise ValueError(f"Invalid s-vector in lambda specification: {text!r}")
        elif not head.strip():
            raise ValueError(f"Invalid lambda specification: {text!r}")
        return cls(hat=hat, s=s)

    model_config = {
        "json_schema_extra": {
            "example": {"hat": 1, "s": [0, 1]}
        }
    }


class RunConfig(BaseModel):
    type: str = Field(..., examples=["A2"], description="Simply-laced type and rank, e.g. A2, D4, E6")
    p: int = Field(2, ge=2, description="Level p >= 2")
    lam: LambdaSpec = Field(default_factory=LambdaSpec)
    qmax: str = Field("6", description="Bound on the L_0 eigenvalue for character series")
    deltamax: str = Field("3", description="Bound on conformal weight for Fock computations")
    format: OutputFormat = OutputFormat.JSON
    max_basis: Optional[int] = Field(None, gt=0)
    max_weyl: Optional[int] = Field(None, gt=0)
    unsafe: bool = False


class RootInfo(BaseModel):
    type: str
    rank: int
    cartan: List[List[int]]
    positive_roots: List[List[int]]
    theta: List[int]
    rho: List[int]
    coxeter: int
    dim_g: int
    weyl_order: int
    minuscule: List[int]
    w0_word: List[int]
    blocks: List[List[int]]


class LambdaEntry(BaseModel):
    label: str
    hat: int
    s: List[int]
    in_alcove: bool
    on_wall: bool


class LambdaListReport(BaseModel):
    type: str
    p: int
    entries: List[LambdaEntry]


class EpsilonStep(BaseModel):
    position: int
    reflection: int
    step: List[int]
    cumulative: List[int]
    state: str


class EpsilonChainReport(BaseModel):
    type: str
    lambda_: str = Field(..., serialization_alias="lambda")
    word: List[int]
    steps: List[EpsilonStep]
    condition_holds: bool
    first_violation: Optional[int] = None
    cumulative: List[int]
    step_sum: List[int]


class EpsilonValue(BaseModel):
    type: str
    lambda_: str = Field(..., serialization_alias="lambda")
    word: List[int]
    epsilon: List[int]
    direct: List[int]
    recursion: bool


class StepTableReport(BaseModel):
    type: str
    lambda_: str = Field(..., serialization_alias="lambda")
    wall: bool
    blocks: List[List[List[int]]]
    expected: List[List[List[int]]]
    matches: bool


class CondCheck(BaseModel):
    type: str
    lambda_: str = Field(..., serialization_alias="lambda")
    condition_holds: bool
    in_alcove: bool
    novel: bool


class CondScanReport(BaseModel):
    type: str
    p: int
    total: int
    alcove: int
    mismatches: List[str]
    sum_failures: List[str]
    non_alcove_passing: List[str]
    novel_outside_alcove: List[str] = []


class SeriesTerm(BaseModel):
    q: str
    z: List[int]
    coefficient: str


class SeriesReport(BaseModel):
    type: str
    lambda_: str = Field(..., serialization_alias="lambda")
    side: CharacterSide
    order: str
    conjectural: bool = False
    terms: List[SeriesTerm]
    graded_dimensions: Dict[str, str]


class DiffEntry(BaseModel):
    q: str
    z: List[int]
    lhs: str
    rhs: str


class CompareReport(BaseModel):
    type: str
    lambda_: str = Field(..., serialization_alias="lambda")
    order: str
    matches: bool
    conjectural: bool = False
    diffs: List[DiffEntry]


class BasisVectorModel(BaseModel):
    point: List[int]
    creations: List[List[int]]
    delta: str


class BasisReport(BaseModel):
    type: str
    lambda_: str = Field(..., serialization_alias="lambda")
    delta_max: str
    size: int
    vectors: List[BasisVectorModel]


class KernelEntryModel(BaseModel):
    delta: str
    ambient: int
    kernel: int
    weights: Optional[Dict[str, int]] = None


class KernelReport(BaseModel):
    type: str
    lambda_: str = Field(..., serialization_alias="lambda")
    J: List[int]
    entries: List[KernelEntryModel]


class RelationCheckModel(BaseModel):
    name: str
    checked: int
    passed: bool
    skipped: bool = Field(False, description="No case of the relation applies to this parameter")
    counterexamples: List[str]


class RelationReport(BaseModel):
    type: str
    p: int
    delta_max: str
    passed: bool
    checks: List[RelationCheckModel]


class DimsReport(BaseModel):
    pairing: int = Field(..., description="(mu, alpha_i)")
    degree: int
    dimension: int
