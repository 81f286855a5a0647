"""Exact calculus of first-order self-adjoint operators on weighted Bergman spaces.

The library covers the unit ball of C^N and the 2x2 matrix ball: exact
monomial inner products, first-order differential operators with symbolic
commutators, the su(N,1)/su(2,2) operator realizations, the classification
L = c + i*pi_xi(Y) and its inverse templates, the shifted Euler operator with
optimal two-sided norm constants, and Monte-Carlo / linear-algebra numeric
cross-checks.  The ``bergmanops`` CLI exposes the same operations.
"""

from .scalars import ComplexRational, Rational, cplx
from .poly import (
    MultiIndex,
    Polynomial,
    homogeneous_decompose,
    indices_up_to_degree,
    partial_derivative,
    poly_add,
    poly_eval,
    poly_mul,
)
from .spaces import (
    BallSpace,
    BergmanSpace,
    ExactIPValue,
    GramMatrix,
    MatrixBallSpace,
    Unit,
    ball_beta_integral,
    check_selection_rules,
    gram_matrix,
    ip,
    mono_ip_ball,
    mono_ip_matrix_ball,
)
from .operators import (
    FirstOrderOperator,
    SymmetryReport,
    gram_pair_sides,
    gram_pair_witnesses,
    op_apply,
    op_compose_commutator,
    symmetry_check,
)
from .lie import (
    AlgebraType,
    LieAlgebraElement,
    algebra_commutator,
    basis,
    basis_element,
    basis_operator,
    basis_tags,
    bracket_sign,
    expand_in_basis,
    pi_xi,
    realize,
    su22,
    su_n1,
    validate_membership,
)
from .classify import (
    ClassificationError,
    ClassificationResult,
    RelationReport,
    check_relations,
    check_relations_ball,
    check_relations_matrix_ball,
    classify,
    classify_ball,
    classify_matrix_ball,
    make_symmetric_ball,
    make_symmetric_matrix_ball,
)
from .euler import (
    EulerBounds,
    euler_apply,
    euler_bounds,
    euler_inverse,
    euler_norm_check,
    euler_operator,
    norm_ratio,
)
from .decomposition import (
    MatrixBallDecomposition,
    det_identity_check,
    inside_matrix_ball,
    matrix_ball_decompose,
)
from .oracle import OracleEstimate, numeric_ip_oracle
from .exprparse import (
    OrderError,
    ParseError,
    parse_operator,
    parse_to_operator,
    parse_to_polynomial,
    print_expr,
    to_operator,
)

__version__ = "0.1.0"
