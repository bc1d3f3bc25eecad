//! Local and global error patterns, their frequency-domain root sets, and
//! error injection into grids.

use std::collections::BTreeSet;

use crate::code::Code2D;
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::transform::{ffft, BitGrid, RootPair, SpectrumGrid};

/// A local error shape: a bivariate polynomial b(x,y) over GF(2) whose
/// constant-term coefficient is 1, given by its support of (row,col) offsets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ErrorPattern {
    name: String,
    support: BTreeSet<(usize, usize)>,
}

impl ErrorPattern {
    pub fn new(name: impl Into<String>, support: impl IntoIterator<Item = (usize, usize)>) -> Result<ErrorPattern> {
        let support: BTreeSet<_> = support.into_iter().collect();
        if !support.contains(&(0, 0)) {
            return Err(Error::MissingOrigin);
        }
        Ok(ErrorPattern {
            name: name.into(),
            support,
        })
    }

    /// Horizontal burst 1 x len: b(x,y) = 1 + y + ... + y^(len-1).
    pub fn horizontal(len: usize) -> ErrorPattern {
        ErrorPattern {
            name: format!("h{len}"),
            support: (0..len).map(|j| (0, j)).collect(),
        }
    }

    /// Vertical burst len x 1: b(x,y) = 1 + x + ... + x^(len-1).
    pub fn vertical(len: usize) -> ErrorPattern {
        ErrorPattern {
            name: format!("v{len}"),
            support: (0..len).map(|i| (i, 0)).collect(),
        }
    }

    /// Single-bit pattern b = 1.
    pub fn single() -> ErrorPattern {
        ErrorPattern {
            name: "e1".into(),
            support: [(0, 0)].into_iter().collect(),
        }
    }

    /// Parses "h<len>" or "v<len>".
    pub fn parse(name: &str) -> Result<ErrorPattern> {
        let err = || Error::Parse {
            what: "pattern".into(),
            detail: format!("{name:?}; expected h<len> or v<len>"),
        };
        let (kind, len) = name.split_at(1);
        let len: usize = len.parse().map_err(|_| err())?;
        if len == 0 {
            return Err(err());
        }
        match kind {
            "h" => Ok(ErrorPattern::horizontal(len)),
            "v" => Ok(ErrorPattern::vertical(len)),
            _ => Err(err()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn support(&self) -> &BTreeSet<(usize, usize)> {
        &self.support
    }

    /// Smallest bounding box (rows, cols) of the support.
    pub fn extent(&self) -> (usize, usize) {
        let r = self.support.iter().map(|&(i, _)| i).max().unwrap() + 1;
        let c = self.support.iter().map(|&(_, j)| j).max().unwrap() + 1;
        (r, c)
    }

    /// b evaluated at (x, y).
    pub fn eval(&self, field: &Field, x: FieldElement, y: FieldElement) -> FieldElement {
        self.support.iter().fold(FieldElement::ZERO, |acc, &(i, j)| {
            field.add(
                acc,
                field.mul(field.pow(x, i as i64), field.pow(y, j as i64)),
            )
        })
    }

    /// Frequency indices (theta, phi) where b(gamma^theta, beta^phi) = 0.
    pub fn root_indices(&self, field: &Field, roots: &RootPair) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for theta in 0..roots.n {
            for phi in 0..roots.m {
                let x = field.pow(roots.gamma, theta as i64);
                let y = field.pow(roots.beta, phi as i64);
                if self.eval(field, x, y).is_zero() {
                    out.insert((theta, phi));
                }
            }
        }
        out
    }

    /// Cells occupied by the pattern placed at (i, j) with cyclic wraparound.
    pub fn cells_at(&self, at: (usize, usize), n: usize, m: usize) -> BTreeSet<(usize, usize)> {
        self.support
            .iter()
            .map(|&(di, dj)| ((at.0 + di) % n, (at.1 + dj) % m))
            .collect()
    }

    /// True if the pattern placed at (i, j) stays inside the grid.
    pub fn fits_at(&self, at: (usize, usize), n: usize, m: usize) -> bool {
        let (r, c) = self.extent();
        at.0 + r <= n && at.1 + c <= m
    }
}

/// A local pattern translated to a start position, e(x,y) = x^i y^j b(x,y),
/// with exponents reduced cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalError {
    pub pattern: ErrorPattern,
    pub position: (usize, usize),
}

impl GlobalError {
    pub fn new(pattern: ErrorPattern, position: (usize, usize)) -> GlobalError {
        GlobalError { pattern, position }
    }
}

/// Placement mode for bursts near the grid boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Placement {
    /// Bursts wrap around the boundary, consistent with the code's cyclicity.
    #[default]
    Cyclic,
    /// Bursts must fit inside the grid.
    Bounded,
}

/// The error mask of a list of global errors as a grid (GF(2) sum).
pub fn error_mask(
    n: usize,
    m: usize,
    errors: &[GlobalError],
    placement: Placement,
) -> Result<BitGrid> {
    let mut g = BitGrid::zero(n, m);
    for e in errors {
        if placement == Placement::Bounded && !e.pattern.fits_at(e.position, n, m) {
            return Err(Error::PatternOutOfBounds(
                e.pattern.name().to_string(),
                e.position,
            ));
        }
        for cell in e.pattern.cells_at(e.position, n, m) {
            g.flip(cell.0, cell.1);
        }
    }
    Ok(g)
}

/// XORs the error mask of `errors` into `grid` (received = codeword + error).
pub fn inject(grid: &BitGrid, errors: &[GlobalError], placement: Placement) -> Result<BitGrid> {
    grid.xor(&error_mask(grid.n(), grid.m(), errors, placement)?)
}

/// Frequency-domain spectrum of the combined error mask.
pub fn error_spectrum(errors: &[GlobalError], code: &Code2D) -> Result<SpectrumGrid> {
    let mask = error_mask(code.n(), code.m(), errors, Placement::Cyclic)?;
    ffft(&mask, code.roots(), code.field())
}

/// The registered patterns a code is designed to recognize.
#[derive(Debug, Clone)]
pub struct PatternSet {
    n: usize,
    m: usize,
    patterns: Vec<ErrorPattern>,
}

impl PatternSet {
    pub fn empty(n: usize, m: usize) -> PatternSet {
        PatternSet {
            n,
            m,
            patterns: Vec::new(),
        }
    }

    /// The predefined horizontal 1x2 and vertical 2x1 bursts.
    pub fn standard(n: usize, m: usize) -> PatternSet {
        let mut s = PatternSet::empty(n, m);
        s.register(ErrorPattern::horizontal(2)).unwrap();
        s.register(ErrorPattern::vertical(2)).unwrap();
        s
    }

    /// Registers a pattern. A full-row (1 x m) or full-column (n x 1) burst has
    /// identically zero spectrum and is rejected as undetectable.
    pub fn register(&mut self, p: ErrorPattern) -> Result<()> {
        let full_row = p == ErrorPattern::horizontal(self.m) && self.m > 1;
        let full_col = p == ErrorPattern::vertical(self.n) && self.n > 1;
        if full_row || full_col {
            return Err(Error::UndetectablePattern(p.name().to_string()));
        }
        if !self.patterns.contains(&p) {
            self.patterns.push(p);
        }
        Ok(())
    }

    pub fn patterns(&self) -> &[ErrorPattern] {
        &self.patterns
    }

    pub fn by_name(&self, name: &str) -> Option<&ErrorPattern> {
        self.patterns.iter().find(|p| p.name() == name)
    }
}
