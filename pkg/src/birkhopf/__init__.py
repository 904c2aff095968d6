"""Exact Birkhoff decomposition of characters on connected Hopf algebras.

The package computes convolution inverses and Birkhoff (Rota-Baxter)
decompositions of unital maps from a truncated connected Hopf algebra
into an exact coefficient algebra, two independent ways:

* degree recursions (Bogoliubov preparation) in :mod:`birkhopf.convolution`,
* universal closed-form word formulas in :mod:`birkhopf.closedform`,
  obtained by embedding the Hopf algebra into a quasi-shuffle word
  coalgebra and evaluating fixed letter functionals.

Both engines agree on everything; the test suite and the ``birkhopf``
CLI hold them against each other.  :mod:`birkhopf.diffeo` applies the
machinery to factorize identity-tangent formal diffeomorphisms with
Laurent coefficients into pole-free and pole-only parts.
"""

from .scalars import (
    AlgebraElement,
    BasisMismatchError,
    LAURENT,
    LaurentPower,
    POLE_PART,
    ParseError,
    PolePartSplit,
    SYMBOLS,
    SymbolProduct,
    TRIVIAL_PLUS,
    TrivialPlusSplit,
    parse_element,
    render_monomial,
    rota_baxter_identity_holds,
    split_by_name,
)
from .stuffle import (
    EMPTY_WORD,
    StuffleElement,
    Word,
    counit,
    deconcat_coproduct,
    iterated_coproduct,
    render_word,
    stuffle_antipode,
    stuffle_product,
    word,
)
from .series import compose_truncated, multiply_truncated, reversion
from .hopf import (
    HopfAlgebraSpec,
    HopfElement,
    HopfGenerator,
    TruncationError,
    UNIT_MONOMIAL,
    coproduct,
    coproduct_monomial,
    coproduct_table_dict,
    faa_di_bruno_spec,
    hopf_by_name,
    hopf_monomial,
    iterated_coproduct_monomial,
    iterated_reduced_coproduct,
    iterated_reduced_monomial,
    ladder_spec,
    monomials_of_degree,
    monomials_up_to,
    reduced_coproduct,
    reduced_coproduct_monomial,
    render_hopf_monomial,
    validate_spec,
)
from .convolution import (
    Character,
    UnitalLinMap,
    as_unital_map,
    bogoliubov_prepare,
    brb_recursive,
    convolution_unit,
    convolve,
    inverse_recursive,
    inverse_series,
    is_character,
)
from .closedform import (
    CustomFunctional,
    HopfWordElement,
    J,
    J_INVERSE,
    JBarFunctional,
    JFunctional,
    JInverseFunctional,
    JMinusFunctional,
    JPlusFunctional,
    WordFunctional,
    closed_brb,
    closed_inverse,
    eval_functional,
    functional_convolution,
    functional_inverse,
    hopf_word_stuffle,
    iota,
    iota_monomial,
    iota_via_recursion,
    jbar_generic,
    lift_map,
    odot,
    transport,
    transport_materialized,
)
from .diffeo import (
    FormalDiffeo,
    birkhoff_factorize,
    character_to_diffeo,
    compose,
    compositional_inverse,
    diffeo_to_character,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
