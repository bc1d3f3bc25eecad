//! Forward and inverse 2D finite field Fourier transforms, plus the
//! conjugacy-orbit structure on frequency indices.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

/// An n x m array over GF(2): time-domain codewords, error masks, received words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitGrid {
    n: usize,
    m: usize,
    bits: Vec<u8>,
}

impl BitGrid {
    pub fn zero(n: usize, m: usize) -> BitGrid {
        BitGrid {
            n,
            m,
            bits: vec![0; n * m],
        }
    }

    pub fn from_rows(rows: &[&[u8]]) -> BitGrid {
        let n = rows.len();
        let m = rows[0].len();
        let mut g = BitGrid::zero(n, m);
        for (i, row) in rows.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                g.set(i, j, b != 0);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.m + j] != 0
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i * self.m + j] = v as u8;
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.bits[i * self.m + j] ^= 1;
    }

    pub fn xor(&self, other: &BitGrid) -> Result<BitGrid> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(Error::DimensionMismatch {
                expected: (self.n, self.m),
                got: (other.n, other.m),
            });
        }
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(BitGrid {
            n: self.n,
            m: self.m,
            bits,
        })
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b != 0).count()
    }

    pub fn ones(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..self.m).map(move |j| (i, j)))
            .filter(|&(i, j)| self.get(i, j))
            .collect()
    }

    /// Positions where the two grids differ.
    pub fn diff(&self, other: &BitGrid) -> Result<Vec<(usize, usize)>> {
        Ok(self.xor(other)?.ones())
    }

    /// Cyclic shift by (di, dj): entry (i,j) moves to (i+di mod n, j+dj mod m).
    pub fn rotate(&self, di: usize, dj: usize) -> BitGrid {
        let mut out = BitGrid::zero(self.n, self.m);
        for i in 0..self.n {
            for j in 0..self.m {
                if self.get(i, j) {
                    out.set((i + di) % self.n, (j + dj) % self.m, true);
                }
            }
        }
        out
    }

    /// Grid as stored in files: one '0'/'1' line per row.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.m + 1));
        for i in 0..self.n {
            for j in 0..self.m {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<BitGrid> {
        let rows: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if rows.is_empty() {
            return Err(Error::Parse {
                what: "grid".into(),
                detail: "no rows".into(),
            });
        }
        let m = rows[0].trim().len();
        let mut g = BitGrid::zero(rows.len(), m);
        for (i, row) in rows.iter().enumerate() {
            let row = row.trim();
            if row.len() != m {
                return Err(Error::Parse {
                    what: "grid".into(),
                    detail: format!("row {i} has {} columns, expected {m}", row.len()),
                });
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => g.set(i, j, true),
                    _ => {
                        return Err(Error::Parse {
                            what: "grid".into(),
                            detail: format!("invalid character {ch:?} at ({i},{j})"),
                        })
                    }
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Display for BitGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// An n x m array over GF(2^lambda): frequency-domain codewords and syndromes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumGrid {
    n: usize,
    m: usize,
    coeffs: Vec<FieldElement>,
}

impl SpectrumGrid {
    pub fn zero(n: usize, m: usize) -> SpectrumGrid {
        SpectrumGrid {
            n,
            m,
            coeffs: vec![FieldElement::ZERO; n * m],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, theta: usize, phi: usize) -> FieldElement {
        self.coeffs[theta * self.m + phi]
    }

    pub fn set(&mut self, theta: usize, phi: usize, v: FieldElement) {
        self.coeffs[theta * self.m + phi] = v;
    }

    /// Indices at which the spectrum vanishes.
    pub fn zero_indices(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|t| (0..self.m).map(move |p| (t, p)))
            .filter(|&(t, p)| self.get(t, p).is_zero())
            .collect()
    }

    /// Paper-style display: "a13" for alpha^13, "0" for zero.
    pub fn to_display(&self, field: &Field) -> String {
        let mut s = String::new();
        for t in 0..self.n {
            let row: Vec<String> = (0..self.m)
                .map(|p| {
                    let v = self.get(t, p);
                    if v.is_zero() {
                        "0".to_string()
                    } else {
                        format!("a{}", field.log(v).unwrap())
                    }
                })
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Primitive n-th and m-th roots of unity gamma, beta.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootPair {
    pub gamma: FieldElement,
    pub beta: FieldElement,
    pub n: usize,
    pub m: usize,
}

/// gamma = alpha^((2^lambda-1)/n), beta = alpha^((2^lambda-1)/m), with the
/// orders verified exactly.
pub fn make_roots(field: &Field, n: usize, m: usize) -> Result<RootPair> {
    let ord = field.order();
    debug_assert!(ord % n == 0 && ord % m == 0);
    let gamma = field.antilog((ord / n) as i64);
    let beta = field.antilog((ord / m) as i64);
    for (root, want) in [(gamma, n), (beta, m)] {
        let actual = field.element_order(root)?;
        if actual != want {
            return Err(Error::OrderMismatch {
                expected: want,
                actual,
            });
        }
    }
    Ok(RootPair { gamma, beta, n, m })
}

impl RootPair {
    fn check_dims(&self, n: usize, m: usize) -> Result<()> {
        if (self.n, self.m) != (n, m) {
            return Err(Error::DimensionMismatch {
                expected: (self.n, self.m),
                got: (n, m),
            });
        }
        Ok(())
    }
}

/// Forward transform: entry (theta, phi) is the grid's bivariate polynomial
/// evaluated at (gamma^theta, beta^phi), by direct double summation.
pub fn ffft(grid: &BitGrid, roots: &RootPair, field: &Field) -> Result<SpectrumGrid> {
    roots.check_dims(grid.n(), grid.m())?;
    let (n, m) = (grid.n(), grid.m());
    let gpow: Vec<FieldElement> = (0..n as i64).map(|k| field.pow(roots.gamma, k)).collect();
    let bpow: Vec<FieldElement> = (0..m as i64).map(|k| field.pow(roots.beta, k)).collect();
    let mut out = SpectrumGrid::zero(n, m);
    for theta in 0..n {
        for phi in 0..m {
            let mut acc = FieldElement::ZERO;
            for i in 0..n {
                for j in 0..m {
                    if grid.get(i, j) {
                        let term = field.mul(gpow[i * theta % n], bpow[j * phi % m]);
                        acc = field.add(acc, term);
                    }
                }
            }
            out.set(theta, phi, acc);
        }
    }
    Ok(out)
}

/// Inverse transform. With odd n, m over GF(2) the scale factor
/// 1/(n mod 2) * 1/(m mod 2) is 1. Errors if any output entry is not binary,
/// which signals a conjugacy-violating spectrum.
pub fn iffft(spec: &SpectrumGrid, roots: &RootPair, field: &Field) -> Result<BitGrid> {
    roots.check_dims(spec.n(), spec.m())?;
    let (n, m) = (spec.n(), spec.m());
    let scale = field.mul(
        field.inv(FieldElement((n % 2) as u32))?,
        field.inv(FieldElement((m % 2) as u32))?,
    );
    let ginv: Vec<FieldElement> = (0..n as i64).map(|k| field.pow(roots.gamma, -k)).collect();
    let binv: Vec<FieldElement> = (0..m as i64).map(|k| field.pow(roots.beta, -k)).collect();
    let mut out = BitGrid::zero(n, m);
    for i in 0..n {
        for j in 0..m {
            let mut acc = FieldElement::ZERO;
            for theta in 0..n {
                for phi in 0..m {
                    let v = spec.get(theta, phi);
                    if !v.is_zero() {
                        let term = field.mul(field.mul(ginv[i * theta % n], binv[j * phi % m]), v);
                        acc = field.add(acc, term);
                    }
                }
            }
            let acc = field.mul(scale, acc);
            match acc.0 {
                0 => {}
                1 => out.set(i, j, true),
                _ => return Err(Error::NonBinaryResult((i, j))),
            }
        }
    }
    Ok(out)
}

/// A cyclotomic orbit of frequency indices under (theta, phi) ->
/// (2*theta mod n, 2*phi mod m). Binary codewords force the spectrum entry at
/// a doubled index to equal the square of the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyOrbit {
    /// Members in doubling order, starting from the representative.
    pub members: Vec<(usize, usize)>,
}

impl ConjugacyOrbit {
    /// Lexicographically smallest member; by construction the first.
    pub fn representative(&self) -> (usize, usize) {
        self.members[0]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Partition of all n*m frequency indices into doubling orbits, sorted by
/// representative. Each orbit's size divides lambda.
pub fn orbits(n: usize, m: usize) -> Vec<ConjugacyOrbit> {
    let mut seen = vec![false; n * m];
    let mut out = Vec::new();
    for theta in 0..n {
        for phi in 0..m {
            if seen[theta * m + phi] {
                continue;
            }
            let mut members = Vec::new();
            let (mut t, mut p) = (theta, phi);
            loop {
                members.push((t, p));
                seen[t * m + p] = true;
                t = 2 * t % n;
                p = 2 * p % m;
                if (t, p) == (theta, phi) {
                    break;
                }
            }
            // starting index is the smallest unseen one, hence the smallest in
            // its orbit: orbits are scanned in lexicographic order
            out.push(ConjugacyOrbit { members });
        }
    }
    out
}

/// The orbit containing a given index.
pub fn orbit_of(index: (usize, usize), n: usize, m: usize) -> ConjugacyOrbit {
    orbits(n, m)
        .into_iter()
        .find(|o| o.members.contains(&index))
        .expect("index within range")
}

/// True iff spec[theta,phi]^2 = spec[2*theta mod n, 2*phi mod m] everywhere.
pub fn check_conjugate(spec: &SpectrumGrid, field: &Field) -> bool {
    let (n, m) = (spec.n(), spec.m());
    (0..n).all(|t| {
        (0..m).all(|p| field.pow(spec.get(t, p), 2) == spec.get(2 * t % n, 2 * p % m))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Field, RootPair) {
        let f = Field::build(3, 5).unwrap();
        let r = make_roots(&f, 3, 5).unwrap();
        (f, r)
    }

    /// The grid from the worked 3x5 example: ones at (0,0),(0,1),(0,2),(1,1).
    pub(crate) fn example1_grid() -> BitGrid {
        BitGrid::from_rows(&[&[1, 1, 1, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 0, 0, 0]])
    }

    #[test]
    fn roots_for_3x5() {
        let (f, r) = setup();
        // (2^4-1)/3 = 5, (2^4-1)/5 = 3; orders verified by brute-force powering
        assert_eq!(r.gamma, f.antilog(5));
        assert_eq!(r.beta, f.antilog(3));
        assert_eq!(f.pow(r.gamma, 3), FieldElement::ONE);
        assert_eq!(f.pow(r.beta, 5), FieldElement::ONE);
        for k in 1..3 {
            assert_ne!(f.pow(r.gamma, k), FieldElement::ONE);
        }
        for k in 1..5 {
            assert_ne!(f.pow(r.beta, k), FieldElement::ONE);
        }
    }

    #[test]
    fn roots_degenerate_n1() {
        let f = Field::build(1, 1).unwrap();
        let r = make_roots(&f, 1, 1).unwrap();
        assert_eq!(r.gamma, FieldElement::ONE);
        assert_eq!(r.beta, FieldElement::ONE);
    }

    #[test]
    fn ffft_zero_and_delta() {
        let (f, r) = setup();
        let z = ffft(&BitGrid::zero(3, 5), &r, &f).unwrap();
        assert_eq!(z, SpectrumGrid::zero(3, 5));
        let mut d = BitGrid::zero(3, 5);
        d.set(0, 0, true);
        let s = ffft(&d, &r, &f).unwrap();
        for t in 0..3 {
            for p in 0..5 {
                assert_eq!(s.get(t, p), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn ffft_example1_zero_set_and_values() {
        let (f, r) = setup();
        let s = ffft(&example1_grid(), &r, &f).unwrap();
        assert_eq!(
            s.zero_indices(),
            vec![(0, 0), (1, 1), (1, 4), (2, 2), (2, 3)]
        );
        // nonzero entries re-derived under x^4+x+1; they coincide with the
        // published alpha powers
        let expect: [[i64; 5]; 3] = [[-1, 13, 11, 14, 7], [10, -1, 6, 9, -1], [5, 3, -1, -1, 12]];
        for t in 0..3 {
            for p in 0..5 {
                let want = expect[t][p];
                if want >= 0 {
                    assert_eq!(s.get(t, p), f.antilog(want), "at ({t},{p})");
                }
            }
        }
    }

    #[test]
    fn iffft_inverts_ffft_exhaustive_small() {
        let f = Field::build(3, 3).unwrap();
        let r = make_roots(&f, 3, 3).unwrap();
        for bits in 0u32..1 << 9 {
            let mut g = BitGrid::zero(3, 3);
            for k in 0..9 {
                if bits >> k & 1 != 0 {
                    g.set(k / 3, k % 3, true);
                }
            }
            let back = iffft(&ffft(&g, &r, &f).unwrap(), &r, &f).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn iffft_example1_roundtrip() {
        let (f, r) = setup();
        let g = example1_grid();
        let s = ffft(&g, &r, &f).unwrap();
        assert_eq!(iffft(&s, &r, &f).unwrap(), g);
        assert_eq!(
            iffft(&SpectrumGrid::zero(3, 5), &r, &f).unwrap(),
            BitGrid::zero(3, 5)
        );
    }

    #[test]
    fn iffft_rejects_conjugacy_violations() {
        let (f, r) = setup();
        // single alpha at a size-4 orbit representative, zeros elsewhere
        let mut s = SpectrumGrid::zero(3, 5);
        s.set(1, 1, f.alpha());
        assert!(!check_conjugate(&s, &f));
        assert!(matches!(
            iffft(&s, &r, &f),
            Err(Error::NonBinaryResult(_))
        ));
    }

    #[test]
    fn orbits_3x5() {
        let all = orbits(3, 5);
        let sizes: usize = all.iter().map(|o| o.size()).sum();
        assert_eq!(sizes, 15);
        assert_eq!(orbit_of((0, 0), 3, 5).members, vec![(0, 0)]);
        assert_eq!(
            orbit_of((1, 1), 3, 5).members,
            vec![(1, 1), (2, 2), (1, 4), (2, 3)]
        );
        assert_eq!(
            orbit_of((0, 1), 3, 5).members,
            vec![(0, 1), (0, 2), (0, 4), (0, 3)]
        );
        // every orbit size divides lambda = 4
        for o in &all {
            assert_eq!(4 % o.size(), 0);
        }
    }

    #[test]
    fn conjugacy_of_transforms() {
        let (f, r) = setup();
        assert!(check_conjugate(&ffft(&example1_grid(), &r, &f).unwrap(), &f));
    }
}
