"""Graded quotient algebras presented by per-degree relation spans.

A presented algebra is the tensor algebra on gen_dim generators modulo
the two-sided ideal generated by the relation subspaces.  Everything is
computed degree by degree with exact linear algebra: the degree-n ideal
component is the sum of all positional embeddings of the relations, the
graded dimension is the codimension, and normal forms reduce against the
canonical echelon basis of the ideal component.

Components are memoized per instance; instances are intended to be
confined to one thread (the caches are not locked).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .linalg import (
    Matrix,
    Scalar,
    Subspace,
    column_space,
    kronecker,
    subspace_contains,
)
from .report import VerificationReport
from .spaces import EquippedSpace, boxtimes
from .tensors import embed_at, pull_row, phi_table

DEFAULT_DEGREE_CAP = 4


class DegreeCapExceeded(ValueError):
    """Requested graded component lies beyond the instance's degree cap."""


@dataclass(frozen=True)
class FreeElement:
    """Degree-n element of the free tensor algebra in word coordinates."""

    degree: int
    coords: tuple[Scalar, ...]


class PresentedAlgebra:
    """Quotient of the free algebra on gen_dim generators.

    relations maps degree m >= 2 to a Subspace of gen_dim^m.  A
    component_rule callback replaces the standard embed-and-sum ideal
    components for algebras that are not given by a finite presentation
    (the circle product uses this).
    """

    def __init__(
        self,
        gen_dim: int,
        relations: Mapping[int, Subspace] | None = None,
        degree_cap: int = DEFAULT_DEGREE_CAP,
        component_rule: Callable[[int], Subspace] | None = None,
    ):
        if gen_dim < 1:
            raise ValueError("generator dimension must be at least 1")
        relations = dict(relations or {})
        for m, rel in relations.items():
            if m < 2:
                raise ValueError(f"relation degree {m} out of range (need >= 2)")
            if rel.ambient_dim != gen_dim**m:
                raise ValueError(
                    f"relation at degree {m} must live in dimension {gen_dim ** m}"
                )
        self.gen_dim = gen_dim
        self.relations = relations
        self.degree_cap = degree_cap
        self._component_rule = component_rule
        self._components: dict[int, Subspace] = {}

    def ideal_component(self, n: int) -> Subspace:
        """Degree-n slice of the two-sided ideal generated by the relations."""
        if n < 0:
            raise ValueError("degree must be nonnegative")
        if n > self.degree_cap:
            raise DegreeCapExceeded(
                f"degree {n} exceeds cap {self.degree_cap}; "
                "construct the algebra with a larger degree_cap"
            )
        cached = self._components.get(n)
        if cached is not None:
            return cached
        if n <= 1:
            comp = Subspace.zero(self.gen_dim**n)
        elif self._component_rule is not None:
            comp = self._component_rule(n)
        else:
            rows: list[Sequence[Scalar]] = []
            for m, rel in sorted(self.relations.items()):
                if m > n or rel.dim == 0:
                    continue
                for pos in range(n - m + 1):
                    rows.extend(embed_at(rel, n, pos, self.gen_dim).basis.cells)
            comp = Subspace.from_rows(self.gen_dim**n, rows)
        self._components[n] = comp
        return comp

    def graded_dim(self, n: int) -> int:
        return self.gen_dim**n - self.ideal_component(n).dim

    def hilbert(self, max_degree: int) -> list[int]:
        return [self.graded_dim(n) for n in range(max_degree + 1)]

    def complement_words(self, n: int) -> list[int]:
        """Word indices spanning the canonical complement of the ideal."""
        pivots = set(self.ideal_component(n).pivot_columns())
        return [w for w in range(self.gen_dim**n) if w not in pivots]

    def normal_form(self, x: FreeElement) -> tuple[Scalar, ...]:
        """Coordinates of x on the complement words, after killing the ideal.

        Linear in x and vanishes exactly on the ideal component.
        """
        comp = self.ideal_component(x.degree)
        residue = comp.reduce_vector(x.coords)
        return tuple(residue[w] for w in self.complement_words(x.degree))


def apply_U(V: EquippedSpace) -> PresentedAlgebra:
    """Quotient of the tensor algebra by the ideal generated by Im R_n."""
    relations = {
        n: column_space(mat) for n, mat in V.structure_items() if n >= 2
    }
    return PresentedAlgebra(V.dim, relations)


def ideal_component(A: PresentedAlgebra, n: int) -> Subspace:
    return A.ideal_component(n)


def graded_dim(A: PresentedAlgebra, n: int) -> int:
    return A.graded_dim(n)


def hilbert(A: PresentedAlgebra, max_degree: int) -> list[int]:
    return A.hilbert(max_degree)


def normal_form(A: PresentedAlgebra, x: FreeElement) -> tuple[Scalar, ...]:
    return A.normal_form(x)


def circ_product(A: PresentedAlgebra, B: PresentedAlgebra) -> PresentedAlgebra:
    """Subalgebra of A⊗B generated by the degree-one parts.

    Its degree-n ideal component is φ⁻¹(I_A(n)⊗full + full⊗I_B(n)); the
    components are computed on demand because this algebra need not be
    finitely presented even when A and B are.
    """
    dA, dB = A.gen_dim, B.gen_dim

    def component(n: int) -> Subspace:
        table = phi_table(dA, dB, n)
        rows: list[Sequence[Scalar]] = []
        comp_a = A.ideal_component(n)
        if comp_a.dim:
            for row in kronecker(comp_a.basis, Matrix.identity(dB**n)).cells:
                rows.append(pull_row(row, table))
        comp_b = B.ideal_component(n)
        if comp_b.dim:
            for row in kronecker(Matrix.identity(dA**n), comp_b.basis).cells:
                rows.append(pull_row(row, table))
        return Subspace.from_rows((dA * dB) ** n, rows)

    return PresentedAlgebra(
        dA * dB,
        degree_cap=min(A.degree_cap, B.degree_cap),
        component_rule=component,
    )


def check_U_epi(V: EquippedSpace, W: EquippedSpace, N: int) -> VerificationReport:
    """Per-degree containment of the product-space ideal in the circle ideal.

    Passes when, for every n <= N, the ideal of the quotient of V⊠W maps
    into the degree-n ideal component of U(V)∘U(W); this witnesses the
    functorial epimorphism between the two quotients.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    left = apply_U(boxtimes(V, W))
    left.degree_cap = max(left.degree_cap, N)
    UV, UW = apply_U(V), apply_U(W)
    UV.degree_cap = max(UV.degree_cap, N)
    UW.degree_cap = max(UW.degree_cap, N)
    circ = circ_product(UV, UW)
    circ.degree_cap = max(circ.degree_cap, N)
    dims: dict[str, int] = {}
    for n in range(2, N + 1):
        inner = left.ideal_component(n)
        outer = circ.ideal_component(n)
        dims[f"product_ideal_{n}"] = inner.dim
        dims[f"circle_ideal_{n}"] = outer.dim
        if not subspace_contains(outer, inner):
            bad = next(
                row for row in inner.basis.cells if not outer.contains_vector(row)
            )
            return VerificationReport(
                "product-ideal-in-circle-ideal",
                False,
                witness={"degree": n, "vector": list(bad)},
                dimensions=dims,
            )
    return VerificationReport("product-ideal-in-circle-ideal", True, dimensions=dims)


def structure_projector(rel: Subspace) -> Matrix:
    """Idempotent matrix with column space exactly rel.

    Columns are the canonical basis vectors of rel, composed with the
    selection of their pivot coordinates; P² = P holds because the pivot
    coordinates of an echelon basis form an identity block.
    """
    n = rel.ambient_dim
    cols = Matrix.from_columns(rel.basis.cells, n)
    select = [[0] * n for _ in range(rel.dim)]
    for r, p in enumerate(rel.pivot_columns()):
        select[r][p] = 1
    return cols * Matrix(select, cols=n)


def check_algebra_morphism(
    l: Matrix, A: PresentedAlgebra, B: PresentedAlgebra
) -> VerificationReport:
    """Check that l^{⊗m} sends each relation span of A into B's ideal."""
    if l.rows != B.gen_dim or l.cols != A.gen_dim:
        raise ValueError(
            f"map must be {B.gen_dim}x{A.gen_dim}, got {l.rows}x{l.cols}"
        )
    for m, rel in sorted(A.relations.items()):
        lm = Matrix.identity(1)
        for _ in range(m):
            lm = kronecker(lm, l)
        target = B.ideal_component(m)
        for row in rel.basis.cells:
            image = lm.apply(row)
            if not target.contains_vector(image):
                return VerificationReport(
                    "algebra-morphism-preserves-relations",
                    False,
                    witness={"degree": m, "relation": list(row), "image": list(image)},
                )
    return VerificationReport("algebra-morphism-preserves-relations", True)
