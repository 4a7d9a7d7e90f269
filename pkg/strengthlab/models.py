from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from strengthlab.enumeration import CURSOR_VERSION, EnumCursor


class CursorModel(BaseModel):
    """Wire form of an enumeration cursor"""

    order: int = Field(description='Order of the graphs being enumerated')
    path: List[int] = Field(
        default_factory=list,
        description='Augmentation masks leading to the last visited class',
    )
    shard: int = Field(default=0, description='Shard index')
    shard_count: int = Field(default=1, description='Number of shards')
    visited: int = Field(default=0, description='Classes visited by this shard so far')
    done: bool = Field(default=False, description='True when the shard needs no more work')
    version: int = Field(default=CURSOR_VERSION, description='Cursor format version')

    @classmethod
    def from_cursor(cls, cursor: EnumCursor) -> 'CursorModel':
        return cls(
            order=cursor.order,
            path=list(cursor.path),
            shard=cursor.shard,
            shard_count=cursor.shard_count,
            visited=cursor.visited,
            done=cursor.done,
            version=cursor.version,
        )

    def to_cursor(self) -> EnumCursor:
        cursor = EnumCursor(
            order=self.order,
            path=tuple(self.path),
            shard=self.shard,
            shard_count=self.shard_count,
            visited=self.visited,
            done=self.done,
            version=self.version,
        )
        cursor.validate()
        return cursor


class SearchCheckpoint(BaseModel):
    """State of one sharded search"""

    job: str = Field(description='Search kind, e.g. arrows or fmax')
    order: int = Field(description='Order being enumerated')
    params: List[int] = Field(default_factory=list, description='Job parameters such as (s, t)')
    cursors: List[CursorModel] = Field(description='One cursor per shard')
    examined: int = Field(default=0, description='Classes examined over all rounds')
    rounds: int = Field(default=0, description='Completed rounds')
    best: Optional[Dict[str, Any]] = Field(
        default=None, description='Reduction accumulator: counterexample or maximum so far'
    )


class CheckpointFile(BaseModel):
    """Checkpoint file holding every search started with it"""

    version: int = Field(default=CURSOR_VERSION, description='Checkpoint format version')
    searches: Dict[str, SearchCheckpoint] = Field(
        default_factory=dict, description='Searches keyed by job, order and parameters'
    )


class StrengthReport(BaseModel):
    graph6: str = Field(description='Input graph in graph6')
    order: int
    size: int
    strength: int = Field(description='str(G)')
    witness: List[int] = Field(description='1-based labels of an optimal numbering, by vertex')
    method: str
    witness_source: str
    max_fk_in_complement: Optional[int] = Field(
        default=None, description='Largest k with F_k inside the complement'
    )
    complement_strength: Optional[int] = Field(
        default=None, description='str of the complement, absent when it is edgeless'
    )
    complement_witness: Optional[List[int]] = None
    lower_bound: Optional[int] = Field(
        default=None, description='n + min degree, present when there is no isolated vertex'
    )
    upper_bound: int = Field(description='2n minus the independence number')
    brute_force_strength: Optional[int] = Field(
        default=None, description='Exhaustive value when both methods were requested'
    )
    agreement: Optional[bool] = Field(
        default=None, description='Whether both methods agree'
    )


class EmptyGraphReport(BaseModel):
    graph6: str
    order: int
    size: int = 0
    strength: Optional[int] = Field(default=None, description='Undefined for an edgeless graph')
    complement_strength: Optional[int] = None


class RamseyRecord(BaseModel):
    s: int
    t: int
    status: str = Field(description='exact or bounded')
    value: Optional[int] = None
    lower: Optional[int] = None
    upper: Optional[int] = Field(default=None, description='Absent when no upper bound is known')
    witness_graph6: Optional[str] = Field(
        default=None, description='Non-arrowing graph of order value - 1 (or lower - 1)'
    )
    witness_family: Optional[str] = Field(
        default=None, description='Named family of the witness when recognised'
    )
    classes_examined: int = 0
    reference: Optional[int] = Field(
        default=None, description='Published value for pairs that stay bounded at desk scale'
    )
    elapsed: Optional[float] = Field(default=None, description='Seconds, only with --timing')


class FMaxReport(BaseModel):
    n: int
    value: int = Field(description='max of str(G) + str of the complement')
    witness_graph6: str
    complement_graph6: str
    witness_family: Optional[str] = None
    complement_family: Optional[str] = None
    classes_examined: int = 0
    elapsed: Optional[float] = None


class VerifyReport(BaseModel):
    suite: str
    passed: bool
    checks: int = Field(description='Number of individual assertions evaluated')
    failures: List[str] = Field(default_factory=list)
    details: Dict[str, int] = Field(default_factory=dict)
