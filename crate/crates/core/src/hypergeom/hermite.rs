use kzr_exact::{Field, FieldScalar, Poly, RationalFunction};

fn exact_div(a: &Poly<FieldScalar>, b: &Poly<FieldScalar>) -> Poly<FieldScalar> {
    let (q, r) = a.div_rem(b).expect("nonzero divisor");
    debug_assert!(r.is_zero(), "inexact polynomial division");
    q
}

fn antiderivative(p: &Poly<FieldScalar>) -> Poly<FieldScalar> {
    let mut c = vec![FieldScalar::zero()];
    for (k, a) in p.coeffs().iter().enumerate() {
        c.push(a.clone() * &FieldScalar::ratio(1, k as i64 + 1));
    }
    Poly::new(c)
}

/// Hermite reduction (linear version) of a proper fraction `a/d`: returns
/// `(g, h)` with `∫ a/d = g + ∫ h` and `h` having a squarefree denominator.
pub fn hermite_reduce(a: &Poly<FieldScalar>, d: &Poly<FieldScalar>) -> (RationalFunction, RationalFunction) {
    let mut a = a.clone();
    let mut g = RationalFunction::zero();
    let mut d_minus = d.gcd(&d.derivative());
    let d_star = exact_div(d, &d_minus);
    while d_minus.degree().unwrap_or(0) > 0 {
        let d_minus2 = d_minus.gcd(&d_minus.derivative());
        let d_minus_star = exact_div(&d_minus, &d_minus2);
        let lhs = exact_div(&(&d_star * &d_minus.derivative()), &d_minus).scale(&-FieldScalar::one());
        let (b, c) = Poly::diophantine(&lhs, &d_minus_star, &a).expect("coprime by construction");
        a = &c - &exact_div(&(&b.derivative() * &d_star), &d_minus_star);
        g = g + &RationalFunction::new(b, d_minus.clone()).expect("nonzero");
        d_minus = d_minus2;
    }
    let h = RationalFunction::new(a, d_star).expect("nonzero");
    (g, h)
}

/// Antiderivative of `f` when it is rational, `None` when a logarithmic part
/// remains.
pub fn integrate_rational(f: &RationalFunction) -> Option<RationalFunction> {
    let (q, r) = f.numerator().div_rem(f.denominator()).expect("nonzero");
    let (g, h) = hermite_reduce(&r, f.denominator());
    if !h.is_zero() {
        return None;
    }
    Some(RationalFunction::from_poly(antiderivative(&q)) + &g)
}
