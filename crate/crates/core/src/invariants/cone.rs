//! Cone presentation of knot invariants and the symmetry reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{GaussianRational, LaurentPoly, MonomialSubstitution};
use crate::error::{Error, Result};
use crate::report::Report;

/// Coefficients of `t1^{2a} t2^{2b}` for `a ≥ 0`, `|b| ≤ a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeTable {
    pub entries: BTreeMap<(i32, i32), i64>,
}

impl ConeTable {
    pub fn get(&self, a: i32, b: i32) -> i64 {
        self.entries.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Largest `a` with a nonzero entry.
    pub fn width(&self) -> i32 {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Rebuilds the full polynomial using `(a,b) → (b,a)` and `(a,b) → (−a,−b)`.
    pub fn reconstruct(&self) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (&(a, b), &c) in &self.entries {
            for (x, y) in [(a, b), (b, a), (-a, -b), (-b, -a)] {
                terms.insert((2 * x, 2 * y), c);
            }
        }
        LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, GaussianRational::from_int(c))))
    }

    /// `(a, b, c)` triples in cone order, for serialization.
    pub fn triples(&self) -> Vec<(i32, i32, i64)> {
        self.entries.iter().map(|(&(a, b), &c)| (a, b, c)).collect()
    }
}

impl fmt::Display for ConeTable {
    /// One row per `b` from `width` down to `−width`, columns `a = 0..=width`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.width();
        let cell = |a: i32, b: i32| if b.abs() <= a { self.get(a, b).to_string() } else { String::new() };
        let widest = self.entries.values().map(|c| c.to_string().len()).max().unwrap_or(1);
        for b in (-w..=w).rev() {
            let row: Vec<String> = (0..=w).map(|a| format!("{:>widest$}", cell(a, b))).collect();
            writeln!(f, "{}", row.join(" ").trim_end())?;
        }
        Ok(())
    }
}

fn int_coeff(c: &GaussianRational) -> Option<i64> {
    if c.is_real() && c.re.is_integer() {
        i64::try_from(*c.re.numer()).ok()
    } else {
        None
    }
}

/// Extracts the cone entries, rejecting polynomials that are not of knot shape.
pub fn cone_coefficients(p: &LaurentPoly) -> Result<ConeTable> {
    if MonomialSubstitution::SWAP.apply(p) != *p {
        return Err(Error::Invalid("polynomial is not symmetric under t1 <-> t2".into()));
    }
    let mut entries = BTreeMap::new();
    for ((e1, e2), c) in p.terms() {
        if e1 % 2 != 0 || e2 % 2 != 0 {
            return Err(Error::Invalid(format!("odd exponent in t1^{e1} t2^{e2}")));
        }
        let v = int_coeff(c).ok_or_else(|| Error::Invalid(format!("non-integral coefficient {c}")))?;
        if p.coeff(-e1, -e2) != *c {
            return Err(Error::Invalid("polynomial is not symmetric under (a,b) -> (-a,-b)".into()));
        }
        let (a, b) = (e1 / 2, e2 / 2);
        if a >= 0 && b.abs() <= a {
            entries.insert((a, b), v);
        }
    }
    let table = ConeTable { entries };
    if table.reconstruct() != *p {
        return Err(Error::Invalid("cone entries do not reconstruct the polynomial".into()));
    }
    Ok(table)
}

fn full_coeff(p: &LaurentPoly, a: i32, b: i32) -> i64 {
    int_coeff(&p.coeff(2 * a, 2 * b)).unwrap_or(0)
}

/// Swap invariance is a theorem; inversion invariance and the coefficient
/// patterns are observations, recorded but not required.
pub fn check_symmetries(p: &LaurentPoly, alexander: Option<&LaurentPoly>) -> (Report, Report) {
    let mut asserted = Report::new("symmetry");
    asserted.check("swap t1 <-> t2", MonomialSubstitution::SWAP.apply(p) == *p);
    let mut observed = Report::new("observed symmetries");
    observed.check("inversion t_i -> -t_i^-1", MonomialSubstitution::INVERSION.apply(p) == *p);
    let w = p.terms().iter().map(|((a, b), _)| (a.abs().max(b.abs()) + 1) / 2).max().unwrap_or(0);
    let mut pairs_b = true;
    let mut pairs_a = true;
    for a in 0..=w {
        for b in 0..=w {
            let c = full_coeff(p, a, b);
            let sb = if b % 2 == 0 { 1 } else { -1 };
            let sa = if a % 2 == 0 { 1 } else { -1 };
            pairs_b &= full_coeff(p, a - b, -b) == sb * c;
            pairs_a &= full_coeff(p, a, a - b) == sa * c;
        }
    }
    observed.check("(a,b) ~ (a-b,-b) with sign (-1)^b", pairs_b);
    observed.check("(a,b) ~ (a,a-b) with sign (-1)^a", pairs_a);
    if let (Some(alex), Ok(table)) = (alexander, cone_coefficients(p)) {
        let w = table.width();
        if table.get(w, w) == 1 {
            let column: Vec<i64> = (0..=w).map(|b| table.get(w, b)).collect();
            let column = trim_zeros(&column);
            let alex_coeffs: Vec<i64> = alex.terms().iter().filter_map(|(_, c)| int_coeff(c)).collect();
            let negated: Vec<i64> = alex_coeffs.iter().map(|c| -c).collect();
            let ok = column == alex_coeffs || column == negated;
            observed.check_with("rightmost column gives the Alexander coefficients up to sign", ok, format!("{column:?} vs {alex_coeffs:?}"));
        }
    }
    (asserted, observed)
}

fn trim_zeros(v: &[i64]) -> Vec<i64> {
    let start = v.iter().position(|&c| c != 0).unwrap_or(v.len());
    let end = v.iter().rposition(|&c| c != 0).map(|i| i + 1).unwrap_or(start);
    v[start..end].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;

    fn trefoil() -> LaurentPoly {
        parse_poly(
            "(t1^4*t2^4 + t1^-4*t2^-4) - (t1^4*t2^2 + t1^2*t2^4 + t1^-4*t2^-2 + t1^-2*t2^-4) + (t1^4 + t2^4 + t1^-4 + t2^-4) \
             + 2*(t1^2*t2^2 + t1^-2*t2^-2) - 2*(t1^2 + t2^2 + t1^-2 + t2^-2) + (t1^2*t2^-2 + t1^-2*t2^2) + 1",
        )
        .unwrap()
    }

    #[test]
    fn trefoil_cone() {
        let t = cone_coefficients(&trefoil()).unwrap();
        let want = [((2, 2), 1), ((2, 1), -1), ((2, 0), 1), ((1, 1), 2), ((1, 0), -2), ((1, -1), 1), ((0, 0), 1)];
        assert_eq!(t.entries, want.into_iter().collect::<BTreeMap<_, _>>());
        assert_eq!(t.reconstruct(), trefoil());
    }

    #[test]
    fn trivial_and_rejected() {
        assert_eq!(cone_coefficients(&LaurentPoly::one()).unwrap().entries, [((0, 0), 1)].into_iter().collect());
        assert!(cone_coefficients(&parse_poly("t1^2").unwrap()).is_err());
        assert!(cone_coefficients(&parse_poly("t1 + t2").unwrap()).is_err());
    }

    #[test]
    fn symmetry_reports() {
        let alex = parse_poly("t1 - 1 + t1^-1").unwrap();
        let (a, o) = check_symmetries(&trefoil(), Some(&alex));
        assert!(a.passed());
        assert!(o.passed(), "{o}");
        assert_eq!(o.checks.len(), 4);
        // the figure-eight column reads 1, -3, 1 against the Conway form -t + 3 - 1/t
        let fig8 = parse_poly(
            "t1^4*t2^4 - 3*t1^4*t2^2 + t1^4 - 3*t1^2*t2^4 + 12*t1^2*t2^2 - 12*t1^2 + 3*t1^2*t2^-2 + t2^4 - 12*t2^2 + 25 - 12*t2^-2 + t2^-4 \
             + 3*t1^-2*t2^2 - 12*t1^-2 + 12*t1^-2*t2^-2 - 3*t1^-2*t2^-4 + t1^-4 - 3*t1^-4*t2^-2 + t1^-4*t2^-4",
        )
        .unwrap();
        let col = cone_coefficients(&fig8).unwrap();
        assert_eq!((col.get(2, 2), col.get(2, 1), col.get(2, 0)), (1, -3, 1));
        let (_, o) = check_symmetries(&fig8, Some(&parse_poly("-t1 + 3 - t1^-1").unwrap()));
        assert!(o.passed(), "{o}");
        let hopf = parse_poly("(t1 - t1^-1)*(t2 - t2^-1)*(t1*t2 + t1^-1*t2^-1)").unwrap();
        assert!(check_symmetries(&hopf, None).0.passed());
        let (a, o) = check_symmetries(&parse_poly("t1 + t2").unwrap(), None);
        assert!(a.passed());
        assert!(!o.checks[0].passed);
    }

    #[test]
    fn display_rows() {
        let text = cone_coefficients(&trefoil()).unwrap().to_string();
        assert_eq!(text.lines().count(), 5);
        assert_eq!(text.lines().next().unwrap().split_whitespace().collect::<Vec<_>>(), vec!["1"]);
    }
}
