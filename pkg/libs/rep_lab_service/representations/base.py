"""
Abstract base class for matrix representations
"""
from abc import ABC, abstractmethod
from typing import Dict, Hashable, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from ..models import Provenance, RelationError, RepKind


class AbstractRepresentation(ABC):
    """
    Finite-dimensional module given by n x n rational matrices.

    Subclasses expose the action of the algebra generators as global n x n matrices and the
    vertex idempotents (the identity for group algebras). `semisimple_parts` is set by
    builders that know the module is ⊕ S_i^{e_i}: one (dim S_i, e_i) per isomorphism class.
    """

    def __init__(self, size: int, provenance: Optional[Provenance] = None):
        self.size = size
        self.provenance = provenance
        self.semisimple_parts: Optional[Tuple[Tuple[int, int], ...]] = None

    @property
    @abstractmethod
    def kind(self) -> RepKind:
        """Algebra family of this representation"""
        pass

    @property
    @abstractmethod
    def signature(self) -> Hashable:
        """Identifies the algebra; direct sums need equal signatures"""
        pass

    @property
    @abstractmethod
    def square_sum(self) -> int:
        """Σ_v α_v², the dimension of the gauge group"""
        pass

    @abstractmethod
    def generators(self) -> Dict[str, DomainMatrix]:
        """Label -> global matrix of each algebra generator"""
        pass

    @abstractmethod
    def idempotents(self) -> List[DomainMatrix]:
        """Global matrices of the vertex idempotents"""
        pass

    @abstractmethod
    def relation_holds(self) -> bool:
        """Whether the defining relation of the algebra is satisfied"""
        pass

    @abstractmethod
    def direct_sum(self, other: "AbstractRepresentation") -> "AbstractRepresentation":
        """Block-diagonal sum with a representation of the same algebra"""
        pass

    def actions(self) -> List[DomainMatrix]:
        """Generators followed by idempotents"""
        return list(self.generators().values()) + self.idempotents()

    def require_relation(self) -> None:
        if not self.relation_holds():
            raise RelationError(f"{self.kind.value} representation does not satisfy its relation")
