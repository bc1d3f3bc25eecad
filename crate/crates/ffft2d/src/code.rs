//! Code definition and frequency-domain encoder: common zero set management
//! (conjugacy closure, indicator validation, disjoint-syndrome criterion) and
//! the message-bits to binary-codeword map.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::error_model::{ErrorPattern, PatternSet};
use crate::galois::{Field, FieldElement};
use crate::transform::{ffft, iffft, make_roots, orbits, BitGrid, ConjugacyOrbit, RootPair, SpectrumGrid};

/// The common zero set: declared indices, their conjugacy closure, and the
/// indicator subset used for a-priori pattern identification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSet {
    pub declared: Vec<(usize, usize)>,
    pub closure: BTreeSet<(usize, usize)>,
    pub indicator: Vec<(usize, usize)>,
}

impl ZeroSet {
    /// Declared zeros that are not indicators, in declaration order.
    pub fn non_indicator(&self) -> Vec<(usize, usize)> {
        self.declared
            .iter()
            .copied()
            .filter(|z| !self.indicator.contains(z))
            .collect()
    }
}

/// A fully built 2D cyclic code over GF(2), characterized by its common zero
/// set in the frequency domain.
#[derive(Debug, Clone)]
pub struct Code2D {
    n: usize,
    m: usize,
    field: Field,
    roots: RootPair,
    zeros: ZeroSet,
    message_orbits: Vec<ConjugacyOrbit>,
    k_bits: usize,
    /// GF(2)-basis of GF(2^d) inside the field, per orbit size d.
    orbit_bases: BTreeMap<u32, Vec<FieldElement>>,
    patterns: PatternSet,
}

pub struct BuildOutput {
    pub code: Code2D,
    /// Non-fatal findings, e.g. a failed disjointness check.
    pub warnings: Vec<String>,
}

/// Builds a code from declared zeros. The declared list may give orbit
/// representatives only; since binary codewords force conjugate zeros, the
/// code is defined by the conjugacy closure, while the declared list supplies
/// the indices used for syndrome equations.
pub fn build_code(
    n: usize,
    m: usize,
    declared: &[(usize, usize)],
    indicator: &[(usize, usize)],
    patterns: &PatternSet,
) -> Result<BuildOutput> {
    let field = Field::build(n, m)?;
    let roots = make_roots(&field, n, m)?;

    for &(t, p) in declared.iter().chain(indicator) {
        if t >= n || p >= m {
            return Err(Error::IndexOutOfRange((t, p), n, m));
        }
    }
    for z in indicator {
        if !declared.contains(z) {
            return Err(Error::IndicatorNotAZero(*z));
        }
    }
    // Theorem 1: an indicator must be a root of at least one registered
    // pattern, otherwise evaluating the received word there says nothing.
    for &(t, p) in indicator {
        let hit = patterns.patterns().iter().any(|pat| {
            pat.root_indices(&field, &roots).contains(&(t, p))
        });
        if !hit {
            return Err(Error::IndicatorNotPatternRoot((t, p)));
        }
    }

    let all_orbits = orbits(n, m);
    let mut closure = BTreeSet::new();
    for z in declared {
        let orbit = all_orbits
            .iter()
            .find(|o| o.members.contains(z))
            .expect("index in range");
        closure.extend(orbit.members.iter().copied());
    }
    let message_orbits: Vec<ConjugacyOrbit> = all_orbits
        .into_iter()
        .filter(|o| !closure.contains(&o.representative()))
        .collect();
    let k_bits = n * m - closure.len();
    debug_assert_eq!(
        k_bits,
        message_orbits.iter().map(|o| o.size()).sum::<usize>()
    );

    let mut orbit_bases = BTreeMap::new();
    for o in &message_orbits {
        let d = o.size() as u32;
        if !orbit_bases.contains_key(&d) {
            orbit_bases.insert(d, field.subfield_basis(d)?);
        }
    }

    let code = Code2D {
        n,
        m,
        field,
        roots,
        zeros: ZeroSet {
            declared: declared.to_vec(),
            closure,
            indicator: indicator.to_vec(),
        },
        message_orbits,
        k_bits,
        orbit_bases,
        patterns: patterns.clone(),
    };

    let mut warnings = Vec::new();
    let pats = code.patterns.patterns();
    for a in 0..pats.len() {
        for b in a..pats.len() {
            if !check_disjoint(&code, &pats[a], &pats[b]) && a != b {
                warnings.push(format!(
                    "syndromes of {} and {} are not disjoint; combined correction may be ambiguous",
                    pats[a].name(),
                    pats[b].name()
                ));
            }
        }
    }
    Ok(BuildOutput { code, warnings })
}

/// Message bits, length exactly k_bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Message {
    pub bits: Vec<u8>,
}

impl Message {
    pub fn from_bit_str(s: &str) -> Result<Message> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse {
                    what: "message".into(),
                    detail: format!("invalid bit {c:?}"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Message { bits })
    }

    pub fn from_index(mut idx: u64, len: usize) -> Message {
        let mut bits = vec![0u8; len];
        for b in bits.iter_mut() {
            *b = (idx & 1) as u8;
            idx >>= 1;
        }
        Message { bits }
    }

    pub fn to_bit_str(&self) -> String {
        self.bits.iter().map(|&b| if b != 0 { '1' } else { '0' }).collect()
    }
}

impl Code2D {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn roots(&self) -> &RootPair {
        &self.roots
    }

    pub fn zeros(&self) -> &ZeroSet {
        &self.zeros
    }

    pub fn message_orbits(&self) -> &[ConjugacyOrbit] {
        &self.message_orbits
    }

    pub fn k_bits(&self) -> usize {
        self.k_bits
    }

    pub fn patterns(&self) -> &PatternSet {
        &self.patterns
    }

    pub fn orbit_bases(&self) -> &BTreeMap<u32, Vec<FieldElement>> {
        &self.orbit_bases
    }

    pub fn check_dims(&self, grid: &BitGrid) -> Result<()> {
        if (grid.n(), grid.m()) != (self.n, self.m) {
            return Err(Error::DimensionMismatch {
                expected: (self.n, self.m),
                got: (grid.n(), grid.m()),
            });
        }
        Ok(())
    }
}

/// Encodes message bits directly in the transformed domain: the spectrum is
/// zero on the closure; each message orbit of size d carries an element of
/// GF(2^d) placed at the representative and propagated by squaring along the
/// orbit, so the conjugacy constraints hold and the inverse transform is
/// binary.
pub fn encode(code: &Code2D, msg: &Message) -> Result<BitGrid> {
    if msg.bits.len() != code.k_bits {
        return Err(Error::LengthMismatch {
            expected: code.k_bits,
            got: msg.bits.len(),
        });
    }
    let spec = message_spectrum(code, msg)?;
    iffft(&spec, &code.roots, &code.field).map_err(|e| match e {
        Error::NonBinaryResult(_) => Error::InternalNonBinary,
        other => other,
    })
}

/// The frequency-domain codeword for a message.
pub fn message_spectrum(code: &Code2D, msg: &Message) -> Result<SpectrumGrid> {
    if msg.bits.len() != code.k_bits {
        return Err(Error::LengthMismatch {
            expected: code.k_bits,
            got: msg.bits.len(),
        });
    }
    let f = &code.field;
    let mut spec = SpectrumGrid::zero(code.n, code.m);
    let mut cursor = 0usize;
    for orbit in &code.message_orbits {
        let d = orbit.size() as u32;
        let basis = &code.orbit_bases[&d];
        let mut value = FieldElement::ZERO;
        for (k, &b) in basis.iter().enumerate() {
            if msg.bits[cursor + k] != 0 {
                value = f.add(value, b);
            }
        }
        cursor += d as usize;
        let mut v = value;
        for &(t, p) in &orbit.members {
            spec.set(t, p, v);
            v = f.mul(v, v);
        }
        debug_assert_eq!(v, value, "subfield element must be fixed by Frobenius^d");
    }
    Ok(spec)
}

/// True iff the grid's spectrum vanishes at every index of the closure.
pub fn is_codeword(code: &Code2D, grid: &BitGrid) -> Result<bool> {
    code.check_dims(grid)?;
    let spec = ffft(grid, &code.roots, &code.field)?;
    Ok(code.zeros.closure.iter().all(|&(t, p)| spec.get(t, p).is_zero()))
}

/// Syndrome of a raw error mask over the declared zeros.
pub(crate) fn mask_syndrome(code: &Code2D, cells: &BTreeSet<(usize, usize)>) -> Vec<FieldElement> {
    let f = &code.field;
    code.zeros
        .declared
        .iter()
        .map(|&(t, p)| {
            cells.iter().fold(FieldElement::ZERO, |acc, &(i, j)| {
                f.add(
                    acc,
                    f.mul(
                        f.pow(code.roots.gamma, (i * t) as i64),
                        f.pow(code.roots.beta, (j * p) as i64),
                    ),
                )
            })
        })
        .collect()
}

/// Disjoint-syndrome criterion: true iff no placement of `p1` produces the
/// same syndrome over the declared zeros as any placement of `p2`. With the
/// same pattern on both sides, identical placements collide trivially, so the
/// result is false.
pub fn check_disjoint(code: &Code2D, p1: &ErrorPattern, p2: &ErrorPattern) -> bool {
    let placements = |p: &ErrorPattern| -> Vec<Vec<FieldElement>> {
        (0..code.n)
            .flat_map(|i| (0..code.m).map(move |j| (i, j)))
            .map(|at| mask_syndrome(code, &p.cells_at(at, code.n, code.m)))
            .collect()
    };
    let s1 = placements(p1);
    let s2 = placements(p2);
    !s1.iter().any(|a| s2.contains(a))
}

/// Serialized form of a code, written by `codegen` and verified on load.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeConfig {
    pub n: usize,
    pub m: usize,
    pub lambda: u32,
    pub primitive_poly: u64,
    pub declared_zeros: Vec<(usize, usize)>,
    pub indicator_zeros: Vec<(usize, usize)>,
    pub closure: Vec<(usize, usize)>,
    pub k_bits: usize,
    /// Basis of GF(2^d) used for message packing, keyed by orbit size d.
    pub orbit_bases: BTreeMap<String, Vec<u32>>,
}

impl CodeConfig {
    pub fn from_code(code: &Code2D) -> CodeConfig {
        CodeConfig {
            n: code.n,
            m: code.m,
            lambda: code.field.lambda(),
            primitive_poly: code.field.primitive_poly(),
            declared_zeros: code.zeros.declared.clone(),
            indicator_zeros: code.zeros.indicator.clone(),
            closure: code.zeros.closure.iter().copied().collect(),
            k_bits: code.k_bits,
            orbit_bases: code
                .orbit_bases
                .iter()
                .map(|(d, basis)| (d.to_string(), basis.iter().map(|e| e.0).collect()))
                .collect(),
        }
    }

    /// Rebuilds the code and checks the derived fields against the file.
    pub fn into_code(self, patterns: &PatternSet) -> Result<Code2D> {
        let built = build_code(
            self.n,
            self.m,
            &self.declared_zeros,
            &self.indicator_zeros,
            patterns,
        )?;
        let code = built.code;
        let expect = CodeConfig::from_code(&code);
        if expect.lambda != self.lambda || expect.primitive_poly != self.primitive_poly {
            return Err(Error::ConfigMismatch(format!(
                "field mismatch: expected lambda={} poly={:#x}",
                expect.lambda, expect.primitive_poly
            )));
        }
        let stored: BTreeSet<_> = self.closure.iter().copied().collect();
        if stored != code.zeros.closure {
            return Err(Error::ConfigMismatch("closure differs".into()));
        }
        if expect.k_bits != self.k_bits {
            return Err(Error::ConfigMismatch(format!(
                "k_bits differs: expected {}",
                expect.k_bits
            )));
        }
        if expect.orbit_bases != self.orbit_bases {
            return Err(Error::ConfigMismatch("orbit_bases differ".into()));
        }
        Ok(code)
    }
}
