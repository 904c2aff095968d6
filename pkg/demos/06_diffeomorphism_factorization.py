"""Factoring a formal diffeomorphism through composition.

A diffeomorphism f(x) = x + sum c_n x^n with Laurent coefficients
factors as f_minus o f = f_plus, where f_minus keeps only polar
coefficient parts and f_plus is pole-free.  Under the bridge between
diffeomorphisms and characters this is exactly the Birkhoff
decomposition from demo 04, with composition playing the role of
convolution.
"""

from birkhopf import FormalDiffeo, POLE_PART, birkhoff_factorize, compose, parse_element

f = FormalDiffeo(
    5,
    {
        2: parse_element("e^-1", "laurent"),
        3: parse_element("2 - e^-2", "laurent"),
        4: parse_element("e", "laurent"),
        5: parse_element("-1/2*e^-1 + e^2", "laurent"),
    },
)
print("f       =", f)

plus, minus = birkhoff_factorize(f, POLE_PART, engine="closed")
print("f_plus  =", plus)
print("f_minus =", minus)
print()

print("f_minus o f == f_plus :", compose(minus, f) == plus)
print("engines agree         :",
      (plus, minus) == birkhoff_factorize(f, POLE_PART, engine="recursive"))
print("f_minus purely polar  :",
      all(POLE_PART.plus(minus.coefficient(n)).is_zero() for n in range(2, 6)))
print("f_plus pole-free      :",
      all(POLE_PART.minus(plus.coefficient(n)).is_zero() for n in range(2, 6)))
