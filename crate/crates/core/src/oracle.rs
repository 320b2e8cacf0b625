//! Brute-force geometric and structural models that independently re-derive
//! the closed-form ring distances and Matrix crossbar counts at small n.
//!
//! Nothing here consults the catalog formulas: ring distances come from
//! walking an explicit serpentine polyline, Matrix counts from enumerating
//! the crossbar grid. `cross_check` then compares the two routes.

use crate::assign::RingMode;
use crate::catalog::{self, GridSpec, ImplSpec, Layout, Topology};
use crate::error::ModelError;

/// The serpentine ring polyline over the n-by-n interface grid, in units of
/// the interface pitch.
///
/// Positions visit the grid in boustrophedon order (row 0 left to right,
/// row 1 right to left, ...); for even n the walk ends directly below its
/// start, and the closing edge back to position 0 is a single straight
/// segment of length n-1.
#[derive(Debug, Clone)]
pub struct SerpentineRing {
    n: u64,
    coordinates: Vec<(u64, u64)>,
    segment_lengths: Vec<u64>,
}

impl SerpentineRing {
    pub fn new(n: u64) -> Result<Self, ModelError> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(ModelError::InvalidGridSize(n));
        }
        let mut coordinates = Vec::with_capacity((n * n) as usize);
        for row in 0..n {
            if row % 2 == 0 {
                for col in 0..n {
                    coordinates.push((col, row));
                }
            } else {
                for col in (0..n).rev() {
                    coordinates.push((col, row));
                }
            }
        }
        let m = coordinates.len();
        let mut segment_lengths = Vec::with_capacity(m);
        for k in 0..m {
            let (x1, y1) = coordinates[k];
            let (x2, y2) = coordinates[(k + 1) % m];
            segment_lengths.push(x1.abs_diff(x2) + y1.abs_diff(y2));
        }
        Ok(Self {
            n,
            coordinates,
            segment_lengths,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Ring positions in visiting order, as (col, row) grid coordinates.
    pub fn coordinates(&self) -> &[(u64, u64)] {
        &self.coordinates
    }

    /// Length of segment k (spanning positions k and k+1 mod m), in pitch
    /// units.
    pub fn segment_lengths(&self) -> &[u64] {
        &self.segment_lengths
    }

    pub fn ports(&self) -> usize {
        self.coordinates.len()
    }

    pub fn circumference(&self) -> u64 {
        self.segment_lengths.iter().sum()
    }

    /// Length of the clockwise walk from `src` to `dst` (clockwise travel
    /// decreases the position index).
    fn walk_clockwise(&self, src: usize, dst: usize) -> u64 {
        let m = self.ports();
        let mut pos = src;
        let mut length = 0;
        while pos != dst {
            let next = (pos + m - 1) % m;
            length += self.segment_lengths[next];
            pos = next;
        }
        length
    }

    fn walk_counter_clockwise(&self, src: usize, dst: usize) -> u64 {
        let m = self.ports();
        let mut pos = src;
        let mut length = 0;
        while pos != dst {
            length += self.segment_lengths[pos];
            pos = (pos + 1) % m;
        }
        length
    }
}

/// Worst source-to-destination distance on the serpentine ring, in pitch
/// units, found by walking every ordered pair.
///
/// Single-direction rings always travel clockwise. Dual-direction rings
/// take the hop-shorter arc; an exact half-ring tie goes clockwise from the
/// smaller index, the same rule the assignment module uses.
pub fn ring_worst_distance(n: u64, mode: RingMode) -> Result<u64, ModelError> {
    let ring = SerpentineRing::new(n)?;
    let m = ring.ports();
    let mut worst = 0;
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let length = match mode {
                RingMode::C => ring.walk_clockwise(i, j),
                RingMode::CCC => {
                    let hops_c = (i + m - j) % m;
                    let hops_cc = (j + m - i) % m;
                    if hops_c < hops_cc || (hops_c == hops_cc && i < j) {
                        ring.walk_clockwise(i, j)
                    } else {
                        ring.walk_counter_clockwise(i, j)
                    }
                }
            };
            worst = worst.max(length);
        }
    }
    Ok(worst)
}

/// Worst-case straight-through intersection count in the Matrix crossbar,
/// found by tracing every input/output path through the grid.
///
/// Inputs enter the rows from the left, outputs leave the columns at the
/// top; the path for connection i -> j runs right along row i to the
/// coupling MR at column j, then up column j and out.
pub fn matrix_worst_crossings(m: usize) -> u64 {
    let mut worst = 0;
    for row in 1..=m {
        for col in 1..=m {
            if row == col {
                continue;
            }
            let mut crossings = 0u64;
            // rightward along the row, straight through every intersection
            // before the turn
            let mut cursor = 1;
            while cursor != col {
                crossings += 1;
                cursor += 1;
            }
            // upward along the column, straight through the rows above
            let mut level = row;
            while level > 1 {
                level -= 1;
                crossings += 1;
            }
            worst = worst.max(crossings);
        }
    }
    worst
}

/// MRs in the Matrix crossbar grid by cell enumeration: every (row, col)
/// cell holds a coupling MR; the reduced form drops the diagonal.
pub fn matrix_mr_count(m: usize, reduced: bool) -> u64 {
    let mut count = 0u64;
    for row in 0..m {
        for col in 0..m {
            if reduced && row == col {
                continue;
            }
            count += 1;
        }
    }
    count
}

/// One closed-form value checked against its brute-force counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct FormulaCheck {
    pub formula: String,
    pub n: u64,
    pub expected: f64,
    pub actual: f64,
}

impl FormulaCheck {
    pub fn matches(&self) -> bool {
        self.expected == self.actual
    }
}

/// Outcome of a full formula-versus-enumeration sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheckReport {
    pub checks: Vec<FormulaCheck>,
}

impl CrossCheckReport {
    pub fn mismatches(&self) -> Vec<&FormulaCheck> {
        self.checks.iter().filter(|c| !c.matches()).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.checks.iter().all(|c| c.matches())
    }
}

/// Compare the catalog closed forms against the brute-force models for
/// every even n up to `n_max` (at unit pitch, so ring distances come out in
/// pitch units).
pub fn cross_check(n_max: u64) -> Result<CrossCheckReport, ModelError> {
    if n_max < 2 || !n_max.is_multiple_of(2) || n_max > 8 {
        return Err(ModelError::InvalidVerifyLimit(n_max));
    }
    let mut checks = Vec::new();
    for n in (2..=n_max).step_by(2) {
        let grid = GridSpec::new(n, 1.0)?;
        let m = grid.ports() as usize;

        let ornoc_c = ImplSpec::new(Topology::OrnocC, Layout::Serpentine)?;
        checks.push(FormulaCheck {
            formula: "d_max_ornoc_c".to_string(),
            n,
            expected: catalog::d_max(&ornoc_c, &grid),
            actual: ring_worst_distance(n, RingMode::C)? as f64,
        });

        let ornoc_ccc = ImplSpec::new(Topology::OrnocCCC, Layout::Serpentine)?;
        checks.push(FormulaCheck {
            formula: "d_max_ornoc_ccc".to_string(),
            n,
            expected: catalog::d_max(&ornoc_ccc, &grid),
            actual: ring_worst_distance(n, RingMode::CCC)? as f64,
        });

        let matrix = ImplSpec::new(Topology::Matrix, Layout::A)?;
        checks.push(FormulaCheck {
            formula: "matrix_n_crossing".to_string(),
            n,
            expected: catalog::n_crossing(&matrix, &grid, &catalog::CrossingModel::ZeroExtra)?
                as f64,
            actual: matrix_worst_crossings(m) as f64,
        });

        let resources = catalog::resource_counts(Topology::Matrix, n)?;
        checks.push(FormulaCheck {
            formula: "matrix_mr_full".to_string(),
            n,
            expected: resources.mr_crossbar_initial as f64,
            actual: matrix_mr_count(m, false) as f64,
        });
        checks.push(FormulaCheck {
            formula: "matrix_mr_reduced".to_string(),
            n,
            expected: resources.mr_crossbar_reduced as f64,
            actual: matrix_mr_count(m, true) as f64,
        });
    }
    Ok(CrossCheckReport { checks })
}
