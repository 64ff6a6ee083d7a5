//! The lattice `Z L + Z E1 + ... + Z E6` of divisor classes on the plane
//! blown up at six points, with intersection form `diag(1, -1, ..., -1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Divisor class `a L + b1 E1 + ... + b6 E6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 7]", into = "[i64; 7]")]
pub struct PicClass {
    pub a: i64,
    pub b: [i64; 6],
}

impl From<[i64; 7]> for PicClass {
    fn from(v: [i64; 7]) -> Self {
        PicClass {
            a: v[0],
            b: [v[1], v[2], v[3], v[4], v[5], v[6]],
        }
    }
}

impl From<PicClass> for [i64; 7] {
    fn from(c: PicClass) -> Self {
        [c.a, c.b[0], c.b[1], c.b[2], c.b[3], c.b[4], c.b[5]]
    }
}

impl PicClass {
    pub const fn new(a: i64, b: [i64; 6]) -> Self {
        PicClass { a, b }
    }

    /// Pullback of a line.
    pub const fn line() -> Self {
        PicClass::new(1, [0; 6])
    }

    /// Exceptional curve over point `i` (1-based).
    pub fn exceptional(i: usize) -> Self {
        let mut b = [0; 6];
        b[i - 1] = 1;
        PicClass::new(0, b)
    }

    /// `E = E1 + ... + E6`.
    pub const fn total_exceptional() -> Self {
        PicClass::new(0, [1; 6])
    }

    /// Canonical class `-3L + E`.
    pub const fn canonical() -> Self {
        PicClass::new(-3, [1; 6])
    }

    /// Strict transform of the line through points `i` and `j`.
    pub fn line_through(i: usize, j: usize) -> Self {
        PicClass::line() - PicClass::exceptional(i) - PicClass::exceptional(j)
    }

    /// Strict transform of the conic through all points but `i`:
    /// `F_i = 2L - E + E_i`.
    pub fn conic_missing(i: usize) -> Self {
        PicClass::line() * 2 - PicClass::total_exceptional() + PicClass::exceptional(i)
    }

    pub fn dot(&self, other: &PicClass) -> i64 {
        self.a * other.a - self.b.iter().zip(&other.b).map(|(x, y)| x * y).sum::<i64>()
    }

    pub fn square(&self) -> i64 {
        self.dot(self)
    }

    /// `D^2 = -1` and `K . D = -1`.
    pub fn is_line(&self) -> bool {
        self.square() == -1 && PicClass::canonical().dot(self) == -1
    }

    /// Name in the `E_i`, `G_ij`, `F_i` notation for the 27 lines, else `None`.
    pub fn line_name(&self) -> Option<String> {
        if !self.is_line() {
            return None;
        }
        let labels = |pred: &dyn Fn(i64) -> bool| -> Vec<usize> {
            (0..6).filter(|&k| pred(self.b[k])).map(|k| k + 1).collect()
        };
        match self.a {
            0 => Some(format!("E{}", labels(&|v| v == 1)[0])),
            1 => {
                let l = labels(&|v| v == -1);
                Some(format!("G{}{}", l[0], l[1]))
            }
            2 => Some(format!("F{}", labels(&|v| v == 0)[0])),
            _ => None,
        }
    }
}

impl Add for PicClass {
    type Output = PicClass;
    fn add(self, o: PicClass) -> PicClass {
        PicClass::new(self.a + o.a, std::array::from_fn(|k| self.b[k] + o.b[k]))
    }
}

impl Sub for PicClass {
    type Output = PicClass;
    fn sub(self, o: PicClass) -> PicClass {
        self + (-o)
    }
}

impl Neg for PicClass {
    type Output = PicClass;
    fn neg(self) -> PicClass {
        PicClass::new(-self.a, self.b.map(|v| -v))
    }
}

impl Mul<i64> for PicClass {
    type Output = PicClass;
    fn mul(self, s: i64) -> PicClass {
        PicClass::new(self.a * s, self.b.map(|v| v * s))
    }
}

impl fmt::Debug for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line_name() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{:?}", <[i64; 7]>::from(*self)),
        }
    }
}

/// `c1 . c2`.
pub fn intersect(c1: &PicClass, c2: &PicClass) -> i64 {
    c1.dot(c2)
}

/// The 27 lines, ordered `E1..E6`, then `G12..G56`, then `F1..F6`.
///
/// Found by searching `0 <= a <= 2` and `b_i in {-1, 0, 1}`, which covers
/// the three shapes a class with `D^2 = K.D = -1` can take.
pub fn lines_27() -> Vec<PicClass> {
    let mut out = Vec::new();
    for a in 0..=2 {
        for code in 0..729usize {
            let mut c = code;
            let b = std::array::from_fn(|_| {
                let v = (c % 3) as i64 - 1;
                c /= 3;
                v
            });
            let d = PicClass::new(a, b);
            if d.is_line() {
                out.push(d);
            }
        }
    }
    out.sort_by_key(|d| {
        let support: Vec<usize> = match d.a {
            0 => (0..6).filter(|&k| d.b[k] == 1).collect(),
            1 => (0..6).filter(|&k| d.b[k] == -1).collect(),
            _ => (0..6).filter(|&k| d.b[k] == 0).collect(),
        };
        (d.a, support)
    });
    out
}

/// Two sixes of lines, mutually skew within each six and with
/// `A_i . B_j = 1 - delta_ij`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DoubleSix {
    pub a: [PicClass; 6],
    pub b: [PicClass; 6],
}

impl DoubleSix {
    /// The double six of the exceptional curves and the six conics.
    pub fn standard() -> Self {
        DoubleSix {
            a: std::array::from_fn(|i| PicClass::exceptional(i + 1)),
            b: std::array::from_fn(|i| PicClass::conic_missing(i + 1)),
        }
    }

    pub fn is_valid(&self) -> bool {
        let all_lines = self.a.iter().chain(&self.b).all(PicClass::is_line);
        let skew = |s: &[PicClass; 6]| (0..6).all(|i| (0..6).all(|j| i == j || s[i].dot(&s[j]) == 0));
        let cross = (0..6).all(|i| (0..6).all(|j| self.a[i].dot(&self.b[j]) == if i == j { 0 } else { 1 }));
        all_lines && skew(&self.a) && skew(&self.b) && cross
    }

    /// Class of a line in the plane obtained by contracting the six `side`:
    /// `(-K + sum A_i) / 3`, when integral.
    pub fn plane_class(side: &[PicClass; 6]) -> Option<PicClass> {
        let s = side.iter().fold(-PicClass::canonical(), |acc, c| acc + *c);
        let ok = s.a % 3 == 0 && s.b.iter().all(|v| v % 3 == 0);
        ok.then(|| PicClass::new(s.a / 3, s.b.map(|v| v / 3)))
    }
}

fn skew_sixes(lines: &[PicClass]) -> Vec<[usize; 6]> {
    fn extend(lines: &[PicClass], chosen: &mut Vec<usize>, start: usize, out: &mut Vec<[usize; 6]>) {
        if chosen.len() == 6 {
            out.push(chosen.as_slice().try_into().expect("six"));
            return;
        }
        for k in start..lines.len() {
            if chosen.iter().all(|&c| lines[c].dot(&lines[k]) == 0) {
                chosen.push(k);
                extend(lines, chosen, k + 1, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(lines, &mut Vec::new(), 0, &mut out);
    out
}

/// All 36 double sixes. Each sixer is listed in `lines_27` order; the
/// side containing the lower-indexed first line is `a`.
pub fn double_sixes() -> Vec<DoubleSix> {
    let lines = lines_27();
    let mut out = Vec::new();
    for six in skew_sixes(&lines) {
        let a: [PicClass; 6] = six.map(|k| lines[k]);
        let partner: Option<Vec<usize>> = (0..6)
            .map(|i| {
                let mut hits = (0..lines.len()).filter(|&k| {
                    (0..6).all(|j| lines[k].dot(&a[j]) == if i == j { 0 } else { 1 })
                });
                let first = hits.next();
                if hits.next().is_some() {
                    None
                } else {
                    first
                }
            })
            .collect();
        let Some(partner) = partner else { continue };
        if partner[0] < six[0] {
            continue;
        }
        let ds = DoubleSix {
            a,
            b: std::array::from_fn(|i| lines[partner[i]]),
        };
        if ds.is_valid() {
            out.push(ds);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_square() {
        let k = PicClass::canonical();
        assert_eq!(intersect(&k, &k), 3);
    }

    #[test]
    fn exceptional_meets_opposite_conic_trivially() {
        for i in 1..=6 {
            assert_eq!(intersect(&PicClass::exceptional(i), &PicClass::conic_missing(i)), 0);
        }
    }

    #[test]
    fn anti_bicanonical_degree_on_e() {
        let minus_2k = PicClass::canonical() * -2;
        assert_eq!(intersect(&minus_2k, &PicClass::total_exceptional()), 12);
        for i in 1..=6 {
            assert_eq!(intersect(&minus_2k, &PicClass::conic_missing(i)), 2);
        }
    }

    #[test]
    fn line_names() {
        let lines = lines_27();
        assert_eq!(lines[0].line_name().unwrap(), "E1");
        assert_eq!(lines[6].line_name().unwrap(), "G12");
        assert_eq!(lines[26].line_name().unwrap(), "F6");
    }

    #[test]
    fn serde_as_integer_array() {
        let json = serde_json::to_string(&PicClass::canonical()).unwrap();
        assert_eq!(json, "[-3,1,1,1,1,1,1]");
        let back: PicClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, PicClass::canonical());
    }
}
