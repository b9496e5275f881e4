use kzr_exact::{FieldMatrix, FieldScalar, Poly, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::symrep::split_square;
use crate::Result;

// trial division stays fast below this; larger constant terms skip the root search
const DIVISOR_SEARCH_LIMIT: u128 = 1 << 80;

/// Exact spectrum analysis of a matrix over Q(√2,√3).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenReport {
    /// Characteristic polynomial, coefficient index = degree.
    pub charpoly: Poly<FieldScalar>,
    pub rational_coefficients: bool,
    /// Rational roots with multiplicity, largest first.
    pub linear_roots: Vec<String>,
    /// What is left after splitting off the rational linear factors (monic).
    pub residual_factor: Poly<FieldScalar>,
    /// Closed form of the residual's roots when it is quadratic, e.g. `(17±√433)/18`.
    pub residual_roots: Option<String>,
    /// Every root known in closed form, one entry per root.
    pub roots: Vec<String>,
    pub integer_spectrum: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Characteristic polynomial, rational-root extraction, and the verdict
/// "integer spectrum" iff it splits into linear factors with integer roots.
pub fn integer_eigenvalue_test(q: &FieldMatrix) -> Result<EigenReport> {
    let charpoly = q.charpoly()?;
    let mut notes = Vec::new();
    let rational: Option<Vec<Rational>> = charpoly.coeffs().iter().map(|c| c.as_rational()).collect();
    let Some(coeffs) = rational else {
        notes.push("characteristic polynomial has irrational coefficients, so no root is an integer".into());
        return Ok(EigenReport {
            residual_factor: charpoly.clone(),
            charpoly,
            rational_coefficients: false,
            linear_roots: vec![],
            residual_roots: None,
            roots: vec![],
            integer_spectrum: false,
            notes,
        });
    };
    let (mut found, residual) = split_rational_roots(Poly::new(coeffs), &mut notes);
    found.sort_by(|a, b| b.cmp(a));
    let mut roots: Vec<String> = found.iter().map(|r| r.to_string()).collect();
    let mut residual_roots = None;
    if residual.degree() == Some(2) {
        let (pair, each) = quadratic_roots(&residual);
        residual_roots = Some(pair);
        roots.extend(each);
    }
    let integer_spectrum = residual.is_constant() && found.iter().all(|r| r.is_integer());
    Ok(EigenReport {
        charpoly,
        rational_coefficients: true,
        linear_roots: found.iter().map(|r| r.to_string()).collect(),
        residual_factor: Poly::new(residual.coeffs().iter().cloned().map(FieldScalar::from_rational).collect()),
        residual_roots,
        roots,
        integer_spectrum,
        notes,
    })
}

fn split_rational_roots(mut p: Poly<Rational>, notes: &mut Vec<String>) -> (Vec<Rational>, Poly<Rational>) {
    let mut found = Vec::new();
    while p.degree().unwrap_or(0) > 0 && p.coeff(0).is_zero() {
        found.push(Rational::zero());
        p = Poly::new(p.coeffs()[1..].to_vec());
    }
    if p.degree().unwrap_or(0) == 0 {
        return (found, p.monic());
    }
    let ints = integer_coefficients(&p);
    let lead = ints.last().expect("nonzero").abs();
    let constant = ints[0].abs();
    let (Some(nums), Some(dens)) = (divisors(&constant), divisors(&lead)) else {
        notes.push("coefficients too large for rational-root search".into());
        return (found, p.monic());
    };
    let mut candidates: Vec<Rational> = Vec::new();
    for n in &nums {
        for d in &dens {
            if n.gcd(d).is_one() {
                let r = Rational::new(n.clone(), d.clone());
                candidates.push(-r.clone());
                candidates.push(r);
            }
        }
    }
    candidates.sort();
    for c in candidates {
        let linear = Poly::new(vec![-c.clone(), Rational::one()]);
        while p.degree().unwrap_or(0) > 0 && p.eval(&c).is_zero() {
            p = p.div_rem(&linear).expect("monic divisor").0;
            found.push(c.clone());
        }
    }
    (found, p.monic())
}

fn integer_coefficients(p: &Poly<Rational>) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| (c * Rational::from(l.clone())).to_integer()).collect()
}

fn divisors(m: &BigInt) -> Option<Vec<BigInt>> {
    let m = m.to_u128().filter(|&m| m > 0 && m < DIVISOR_SEARCH_LIMIT)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u128 = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(BigInt::from(d));
            if d * d != m {
                large.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Roots of a monic rational quadratic `x² + bx + c` as `(A±B√f)/L` with `f`
/// squarefree; also returns the two roots separately.
fn quadratic_roots(p: &Poly<Rational>) -> (String, Vec<String>) {
    let b = p.coeff(1);
    let c = p.coeff(0);
    let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &c;
    let imaginary = disc.is_negative();
    let abs = disc.abs();
    // √(n/d) = √(n·d)/d
    let (square, free) = split_square(&(abs.numer() * abs.denom())).expect("small discriminant");
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let real = -b * &half;
    let rad = Rational::new(square, abs.denom() * BigInt::from(2));
    let l = real.denom().lcm(rad.denom());
    let a_num = real.numer() * (&l / real.denom());
    let b_num = rad.numer() * (&l / rad.denom());
    let radical = match (b_num.is_one(), imaginary) {
        (true, false) => format!("√{free}"),
        (false, false) => format!("{b_num}√{free}"),
        (true, true) => format!("i√{free}"),
        (false, true) => format!("{b_num}i√{free}"),
    };
    let render = |sign: &str| {
        let body = if a_num.is_zero() {
            format!("{sign}{radical}")
        } else {
            format!("{a_num}{sign}{radical}")
        };
        if l.is_one() {
            body
        } else {
            format!("({body})/{l}")
        }
    };
    (render("±"), vec![render("+"), render("-")])
}
