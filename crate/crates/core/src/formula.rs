//! Closed-form values of `gr_k(K3 : r·B3+, s·S3+, t·K3)`.
//!
//! `f(r, s, t)` is the order of the largest Gallai coloring avoiding every
//! assigned pattern, so the Gallai-Ramsey number is `f + 1`. All arithmetic
//! is exact (`BigUint` values, `BigRational` ratios).

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Color;
use crate::pattern::PatternKind;

/// Color counts per role: the first `r` colors forbid B3+, the middle `s`
/// forbid S3+ and the last `t` forbid K3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Parameters {
    pub r: u32,
    pub s: u32,
    pub t: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ColorRole {
    FirstR,
    MiddleS,
    LastT,
}

impl ColorRole {
    pub fn pattern(self) -> PatternKind {
        match self {
            ColorRole::FirstR => PatternKind::B3Plus,
            ColorRole::MiddleS => PatternKind::S3Plus,
            ColorRole::LastT => PatternKind::K3,
        }
    }
}

impl Parameters {
    pub const fn new(r: u32, s: u32, t: u32) -> Self {
        Parameters { r, s, t }
    }

    pub fn k(&self) -> u32 {
        self.r + self.s + self.t
    }

    /// Role of a 1-based color; colors past `k` are reported as `LastT`.
    pub fn role_of(&self, c: Color) -> ColorRole {
        let c = c as u32;
        if c <= self.r {
            ColorRole::FirstR
        } else if c <= self.r + self.s {
            ColorRole::MiddleS
        } else {
            ColorRole::LastT
        }
    }

    /// The 1-based colors holding `role`, ascending.
    pub fn colors_with_role(&self, role: ColorRole) -> std::ops::RangeInclusive<u32> {
        match role {
            ColorRole::FirstR => 1..=self.r,
            ColorRole::MiddleS => self.r + 1..=self.r + self.s,
            ColorRole::LastT => self.r + self.s + 1..=self.k(),
        }
    }

    fn shifted(&self, dr: i32, ds: i32, dt: i32) -> Option<Parameters> {
        Some(Parameters {
            r: self.r.checked_add_signed(dr)?,
            s: self.s.checked_add_signed(ds)?,
            t: self.t.checked_add_signed(dt)?,
        })
    }
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.s, self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConditionLabel {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
}

impl ConditionLabel {
    pub fn index(self) -> u8 {
        self as u8 + 1
    }
}

impl fmt::Display for ConditionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.index())
    }
}

fn even(x: u32) -> bool {
    x.is_multiple_of(2)
}

/// The unique case of the closed form that applies to `p`.
pub fn condition_label(p: &Parameters) -> Result<ConditionLabel> {
    if p.k() == 0 {
        return Err(Error::EmptyPalette);
    }
    Ok(label_unchecked(p))
}

fn label_unchecked(p: &Parameters) -> ConditionLabel {
    use ConditionLabel::*;
    let Parameters { r, s, t } = *p;
    if s == 0 {
        return match (even(r), even(t)) {
            (true, true) => C1,
            (true, false) => C2,
            (false, false) => C3,
            (false, true) => C4,
        };
    }
    if even(r) {
        return if even(s + t) { C5 } else { C6 };
    }
    if !even(s + t) {
        if t >= 1 {
            C7
        } else if s >= 3 {
            C8
        } else {
            C9
        }
    } else {
        C10
    }
}

/// `coef · 17^a · 5^b`.
fn term(coef: u32, a: u32, b: u32) -> BigUint {
    BigUint::from(coef) * BigUint::from(17u32).pow(a) * BigUint::from(5u32).pow(b)
}

/// Order of the extremal coloring; `f(0,0,0) = 1` seeds the recursion.
pub fn f(p: &Parameters) -> BigUint {
    use ConditionLabel::*;
    if p.k() == 0 {
        return BigUint::one();
    }
    let Parameters { r, s, t } = *p;
    match label_unchecked(p) {
        C1 => term(1, r / 2, t / 2),
        C2 => term(2, r / 2, (t - 1) / 2),
        C3 => term(8, (r - 1) / 2, (t - 1) / 2),
        C4 => term(4, (r - 1) / 2, t / 2),
        C5 => term(6, r / 2, (s + t - 2) / 2),
        C6 => term(3, r / 2, (s + t - 1) / 2),
        C7 => term(48, (r - 1) / 2, (s + t - 3) / 2),
        C8 => term(48, (r - 1) / 2, (s - 3) / 2),
        C9 => term(9, (r - 1) / 2, 0),
        C10 => term(24, (r - 1) / 2, (s + t - 2) / 2),
    }
}

/// `f` as a machine integer, when it fits.
pub fn f_u64(p: &Parameters) -> Option<u64> {
    f(p).to_u64()
}

pub fn gallai_ramsey_value(p: &Parameters) -> Result<BigUint> {
    if p.k() == 0 {
        return Err(Error::EmptyPalette);
    }
    Ok(f(p) + 1u32)
}

/// Two-color Ramsey numbers for the pairs drawn from K3, S3+ and B3+.
pub fn classical_ramsey(a: PatternKind, b: PatternKind) -> Result<u32> {
    use PatternKind::*;
    let (x, y) = if a <= b { (a, b) } else { (b, a) };
    match (x, y) {
        (K3, K3) => Ok(6),
        (K3, S3Plus) => Ok(7),
        (K3, B3Plus) => Ok(9),
        (S3Plus, S3Plus) => Ok(7),
        (S3Plus, B3Plus) => Ok(10),
        (B3Plus, B3Plus) => Ok(18),
        _ => Err(Error::UnsupportedPair(a, b)),
    }
}

// ---------------------------------------------------------------------------
// Ratio bounds between neighboring parameter triples
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
enum Bound {
    AtMost(u32, u32),
    Equal(u32, u32),
    /// `1/3` when `s = 1, t = 0`, else `5/16`.
    SplitAtS1T0,
}

/// `(shift of r, shift of s, shift of t, bound)` for each of the seventeen
/// ratios `f(shifted) / f(r, s, t)`.
const RATIO_BOUNDS: [(i32, i32, i32, Bound); 17] = [
    (0, 0, -1, Bound::AtMost(1, 2)),
    (0, -1, 0, Bound::AtMost(1, 2)),
    (-1, 0, 0, Bound::SplitAtS1T0),
    (-1, 1, 0, Bound::AtMost(3, 4)),
    (-1, 0, 1, Bound::AtMost(2, 3)),
    (0, 0, -2, Bound::AtMost(1, 5)),
    (0, -1, -1, Bound::AtMost(1, 5)),
    (0, -2, 0, Bound::AtMost(1, 5)),
    (-1, 0, -1, Bound::AtMost(1, 8)),
    (-1, -1, 0, Bound::AtMost(1, 8)),
    (-1, 1, -1, Bound::AtMost(3, 8)),
    (-1, -1, 1, Bound::AtMost(5, 16)),
    (-2, 1, 1, Bound::AtMost(15, 34)),
    (-2, 1, 0, Bound::AtMost(3, 17)),
    (-2, 0, 2, Bound::AtMost(16, 51)),
    (-2, 0, 1, Bound::AtMost(8, 51)),
    (-2, 0, 0, Bound::Equal(1, 17)),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    /// 1-based position in the ledger.
    pub index: usize,
    pub triple: Parameters,
    pub shifted: Parameters,
    #[serde(serialize_with = "ser_ratio")]
    pub ratio: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub bound: BigRational,
    pub equality_required: bool,
    pub holds: bool,
}

impl InequalityCheck {
    pub fn attains_bound(&self) -> bool {
        self.ratio == self.bound
    }
}

fn ser_ratio<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct InequalityReport {
    pub checks: Vec<InequalityCheck>,
}

impl InequalityReport {
    pub fn violations(&self) -> impl Iterator<Item = &InequalityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn is_clean(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    /// True if inequality `index` holds with equality at some instance
    /// selected by `filter`.
    pub fn attains_equality(&self, index: usize, filter: impl Fn(&Parameters) -> bool) -> bool {
        self.checks
            .iter()
            .any(|c| c.index == index && filter(&c.triple) && c.attains_bound())
    }
}

/// Evaluates all seventeen ratio bounds for every triple with `k ≥ 1` inside
/// the box. Instances whose shifted triple has a negative entry are skipped;
/// a shifted triple with `k = 0` is evaluated with `f(0,0,0) = 1`.
pub fn check_inequalities(max_r: u32, max_s: u32, max_t: u32) -> InequalityReport {
    let mut report = InequalityReport::default();
    for r in 0..=max_r {
        for s in 0..=max_s {
            for t in 0..=max_t {
                let p = Parameters::new(r, s, t);
                if p.k() == 0 {
                    continue;
                }
                let denom = f(&p);
                for (i, &(dr, ds, dt, bound)) in RATIO_BOUNDS.iter().enumerate() {
                    let Some(q) = p.shifted(dr, ds, dt) else {
                        continue;
                    };
                    let ratio = BigRational::new(f(&q).into(), denom.clone().into());
                    let (bound, equality_required) = match bound {
                        Bound::AtMost(a, b) => (BigRational::new(a.into(), b.into()), false),
                        Bound::Equal(a, b) => (BigRational::new(a.into(), b.into()), true),
                        Bound::SplitAtS1T0 if s == 1 && t == 0 => (BigRational::new(1.into(), 3.into()), false),
                        Bound::SplitAtS1T0 => (BigRational::new(5.into(), 16.into()), false),
                    };
                    let holds = if equality_required { ratio == bound } else { ratio <= bound };
                    report.checks.push(InequalityCheck {
                        index: i + 1,
                        triple: p,
                        shifted: q,
                        ratio,
                        bound,
                        equality_required,
                        holds,
                    });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConditionLabel::*;

    fn fv(r: u32, s: u32, t: u32) -> u64 {
        f_u64(&Parameters::new(r, s, t)).unwrap()
    }

    #[test]
    fn labels() {
        let cases = [
            ((2, 0, 2), C1),
            ((1, 1, 0), C9),
            ((1, 3, 0), C8),
            ((1, 1, 2), C7),
            ((1, 2, 0), C10),
            ((0, 0, 1), C2),
            ((1, 0, 1), C3),
            ((1, 0, 0), C4),
            ((0, 2, 0), C5),
            ((0, 1, 0), C6),
        ];
        for ((r, s, t), label) in cases {
            assert_eq!(condition_label(&Parameters::new(r, s, t)).unwrap(), label, "{r} {s} {t}");
        }
        assert!(matches!(condition_label(&Parameters::new(0, 0, 0)), Err(Error::EmptyPalette)));
    }

    #[test]
    fn values() {
        assert_eq!(fv(2, 0, 0), 17);
        assert_eq!(fv(1, 1, 0), 9);
        assert_eq!(fv(2, 2, 2), 510);
        assert_eq!(fv(0, 0, 0), 1);
        assert_eq!(fv(1, 2, 1), 48);
        let gr = |r, s, t| gallai_ramsey_value(&Parameters::new(r, s, t)).unwrap().to_u64().unwrap();
        assert_eq!(gr(0, 0, 2), 6);
        assert_eq!(gr(0, 2, 0), 7);
        assert_eq!(gr(3, 0, 0), 69);
        assert!(gallai_ramsey_value(&Parameters::new(0, 0, 0)).is_err());
    }

    #[test]
    fn ramsey_table() {
        use PatternKind::*;
        assert_eq!(classical_ramsey(K3, K3).unwrap(), 6);
        assert_eq!(classical_ramsey(K3, B3Plus).unwrap(), 9);
        assert_eq!(classical_ramsey(B3Plus, K3).unwrap(), 9);
        assert_eq!(classical_ramsey(S3Plus, S3Plus).unwrap(), 7);
        assert_eq!(classical_ramsey(S3Plus, B3Plus).unwrap(), 10);
        assert_eq!(classical_ramsey(B3Plus, B3Plus).unwrap(), 18);
        assert_eq!(classical_ramsey(K3, S3Plus).unwrap(), 7);
        assert!(matches!(classical_ramsey(K4, K3), Err(Error::UnsupportedPair(K4, K3))));
    }

    #[test]
    fn roles_are_positional() {
        let p = Parameters::new(2, 1, 3);
        let roles: Vec<_> = (1..=6).map(|c| p.role_of(c)).collect();
        use ColorRole::*;
        assert_eq!(roles, vec![FirstR, FirstR, MiddleS, LastT, LastT, LastT]);
        assert_eq!(p.colors_with_role(MiddleS), 3..=3);
        assert_eq!(p.colors_with_role(LastT), 4..=6);
    }

    #[test]
    fn documented_inequality_instances() {
        let report = check_inequalities(2, 2, 2);
        let find = |i: usize, r, s, t| {
            report
                .checks
                .iter()
                .find(|c| c.index == i && c.triple == Parameters::new(r, s, t))
                .cloned()
                .unwrap()
        };
        let c = find(1, 0, 0, 2);
        assert_eq!(c.ratio, BigRational::new(2.into(), 5.into()));
        assert!(c.holds);
        let c = find(17, 2, 0, 0);
        assert_eq!(c.ratio, BigRational::new(1.into(), 17.into()));
        assert!(c.holds && c.attains_bound());
        let c = find(3, 1, 1, 0);
        assert_eq!(c.ratio, BigRational::new(1.into(), 3.into()));
        assert!(c.holds && c.attains_bound());
        // negative shifts are skipped
        assert!(!report.checks.iter().any(|c| c.index == 1 && c.triple.t == 0));
    }
}
