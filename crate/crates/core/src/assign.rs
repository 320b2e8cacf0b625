//! Wavelength assignment on the serpentine ring.
//!
//! The ring has `m` ports at positions `0..m-1` and `m` directed segments,
//! where segment `k` spans positions `k` and `k+1 mod m` (segment `m-1` is
//! the long closing edge of the serpentine). Position indices increase in
//! the counter-clockwise propagation direction, so a signal travelling
//! clockwise from position `p` next reaches `p-1 mod m`. Two signals on the
//! same waveguide may share a wavelength only if the segment sets they
//! traverse are disjoint.
//!
//! Single-direction rings pair the connections `(i,j)` and `(j,i)` on one
//! wavelength: their clockwise arcs are complementary and tile the whole
//! ring. Dual-direction rings route each connection along the hop-shorter
//! arc (clockwise when the hop counts tie and the source index is the
//! smaller), mirror it onto the counter-clockwise waveguide, and pack the
//! clockwise arcs onto wavelengths with a longest-first chain walk plus a
//! first-fit fill.

use crate::error::ModelError;

/// Ring variant: a single clockwise waveguide, or a clockwise and a
/// counter-clockwise waveguide per wavelength.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingMode {
    C,
    CCC,
}

impl RingMode {
    pub fn label(&self) -> &'static str {
        match self {
            RingMode::C => "c",
            RingMode::CCC => "ccc",
        }
    }

    pub fn parse(name: &str) -> Option<RingMode> {
        match name.to_ascii_lowercase().as_str() {
            "c" => Some(RingMode::C),
            "ccc" | "c-cc" => Some(RingMode::CCC),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Clockwise,
    CounterClockwise,
}

impl Direction {
    pub fn label(&self) -> &'static str {
        match self {
            Direction::Clockwise => "C",
            Direction::CounterClockwise => "CC",
        }
    }
}

/// One directed communication: source, destination, the wavelength and
/// waveguide direction it rides, and the ring segments it occupies (in
/// traversal order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub src: usize,
    pub dst: usize,
    pub wavelength: usize,
    pub direction: Direction,
    pub segments: Vec<usize>,
}

/// A complete all-to-all assignment on an m-port ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingAssignment {
    pub ports: usize,
    pub mode: RingMode,
    pub arcs: Vec<Arc>,
    pub wavelength_count: usize,
}

/// Segments crossed travelling clockwise from `src` to `dst`.
fn clockwise_segments(m: usize, src: usize, dst: usize) -> Vec<usize> {
    let mut segments = Vec::new();
    let mut pos = src;
    while pos != dst {
        let next = (pos + m - 1) % m;
        segments.push(next);
        pos = next;
    }
    segments
}

/// Segments crossed travelling counter-clockwise from `src` to `dst`.
fn counter_clockwise_segments(m: usize, src: usize, dst: usize) -> Vec<usize> {
    let mut segments = Vec::new();
    let mut pos = src;
    while pos != dst {
        segments.push(pos);
        pos = (pos + 1) % m;
    }
    segments
}

fn ensure_ports(m: usize, even: bool) -> Result<(), ModelError> {
    if m < 2 {
        return Err(ModelError::PortCountTooSmall(m));
    }
    if even && !m.is_multiple_of(2) {
        return Err(ModelError::PortCountOdd(m));
    }
    Ok(())
}

/// Single-direction assignment: the pair {i, j} shares one wavelength whose
/// two clockwise arcs tile the full ring. Wavelengths are numbered by
/// lexicographic pair order, giving m(m-1)/2 in total.
pub fn assign_c(m: usize) -> Result<RingAssignment, ModelError> {
    ensure_ports(m, false)?;
    let mut arcs = Vec::with_capacity(m * (m - 1));
    let mut wavelength = 0;
    for i in 0..m {
        for j in (i + 1)..m {
            arcs.push(Arc {
                src: i,
                dst: j,
                wavelength,
                direction: Direction::Clockwise,
                segments: clockwise_segments(m, i, j),
            });
            arcs.push(Arc {
                src: j,
                dst: i,
                wavelength,
                direction: Direction::Clockwise,
                segments: clockwise_segments(m, j, i),
            });
            wavelength += 1;
        }
    }
    Ok(RingAssignment {
        ports: m,
        mode: RingMode::C,
        arcs,
        wavelength_count: wavelength,
    })
}

/// The clockwise rider of one unordered pair before packing.
struct Rider {
    src: usize,
    dst: usize,
    hops: usize,
    segments: Vec<usize>,
}

/// Dual-direction assignment. Every pair gets the hop-shorter arc clockwise
/// (ties go clockwise from the smaller index, which routes them across the
/// closing edge) and its mirror counter-clockwise on the same wavelength.
/// Clockwise arcs are packed by walking chains end-to-start, longest arc
/// first, starting from a port that rotates with each new wavelength; arcs
/// the walk cannot reach are filled in first-fit.
pub fn assign_ccc(m: usize) -> Result<RingAssignment, ModelError> {
    ensure_ports(m, true)?;
    let half = m / 2;

    let mut riders = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            let forward = j - i; // clockwise hops j -> i
            let (src, dst, hops) = if forward < half {
                (j, i, forward)
            } else if forward > half {
                (i, j, m - forward)
            } else {
                (i, j, half)
            };
            riders.push(Rider {
                src,
                dst,
                hops,
                segments: clockwise_segments(m, src, dst),
            });
        }
    }

    // Per-port candidate lists, longest arc first.
    let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (id, rider) in riders.iter().enumerate() {
        by_source[rider.src].push(id);
    }
    for list in &mut by_source {
        list.sort_by(|&a, &b| {
            riders[b]
                .hops
                .cmp(&riders[a].hops)
                .then(riders[a].dst.cmp(&riders[b].dst))
        });
    }

    let mut assigned: Vec<Option<usize>> = vec![None; riders.len()];
    let mut remaining = riders.len();
    let mut wavelengths: Vec<Vec<usize>> = Vec::new();
    let mut rotate = 0;

    while remaining > 0 {
        let start = (0..m)
            .map(|k| (rotate + k) % m)
            .find(|&p| by_source[p].iter().any(|&id| assigned[id].is_none()))
            .expect("unassigned arcs always have a source port");

        let w = wavelengths.len();
        let mut used = vec![false; m];
        let mut chain = Vec::new();
        let mut current = start;
        loop {
            let pick = by_source[current].iter().copied().find(|&id| {
                assigned[id].is_none() && riders[id].segments.iter().all(|&s| !used[s])
            });
            let Some(id) = pick else { break };
            for &s in &riders[id].segments {
                used[s] = true;
            }
            assigned[id] = Some(w);
            chain.push(id);
            remaining -= 1;
            current = riders[id].dst;
            if current == start {
                break;
            }
        }

        // First-fit fill with whatever still fits, longest arc first.
        for hops in (1..=half).rev() {
            for id in 0..riders.len() {
                if assigned[id].is_some() || riders[id].hops != hops {
                    continue;
                }
                if riders[id].segments.iter().all(|&s| !used[s]) {
                    for &s in &riders[id].segments {
                        used[s] = true;
                    }
                    assigned[id] = Some(w);
                    chain.push(id);
                    remaining -= 1;
                }
            }
        }

        wavelengths.push(chain);
        rotate = (rotate + 1) % m;
    }

    let mut arcs = Vec::with_capacity(m * (m - 1));
    for (w, chain) in wavelengths.iter().enumerate() {
        for &id in chain {
            let rider = &riders[id];
            arcs.push(Arc {
                src: rider.src,
                dst: rider.dst,
                wavelength: w,
                direction: Direction::Clockwise,
                segments: rider.segments.clone(),
            });
            arcs.push(Arc {
                src: rider.dst,
                dst: rider.src,
                wavelength: w,
                direction: Direction::CounterClockwise,
                segments: counter_clockwise_segments(m, rider.dst, rider.src),
            });
        }
    }
    Ok(RingAssignment {
        ports: m,
        mode: RingMode::CCC,
        arcs,
        wavelength_count: wavelengths.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// Two same-direction, same-wavelength arcs share a ring segment.
    Overlap,
    /// An ordered pair has no arc.
    Missing,
    /// An ordered pair has more than one arc.
    Duplicate,
    /// A mode rule is broken (direction, pair symmetry, arc span, or an
    /// out-of-range index).
    Structure,
}

impl ViolationKind {
    pub fn label(&self) -> &'static str {
        match self {
            ViolationKind::Overlap => "overlap",
            ViolationKind::Missing => "missing",
            ViolationKind::Duplicate => "duplicate",
            ViolationKind::Structure => "structure",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

/// Check every assignment invariant; an empty list means the assignment is
/// feasible. Violations are data, not errors.
pub fn validate(assignment: &RingAssignment) -> Vec<Violation> {
    let m = assignment.ports;
    let mut violations = Vec::new();

    for arc in &assignment.arcs {
        if arc.src >= m || arc.dst >= m {
            violations.push(Violation {
                kind: ViolationKind::Structure,
                detail: format!(
                    "arc {}->{} references a port outside 0..{}",
                    arc.src, arc.dst, m
                ),
            });
        }
        if arc.src == arc.dst {
            violations.push(Violation {
                kind: ViolationKind::Structure,
                detail: format!("arc {}->{} is a self-loop", arc.src, arc.dst),
            });
        }
        if let Some(&s) = arc.segments.iter().find(|&&s| s >= m) {
            violations.push(Violation {
                kind: ViolationKind::Structure,
                detail: format!(
                    "arc {}->{} uses segment {} outside 0..{}",
                    arc.src, arc.dst, s, m
                ),
            });
        }
        if arc.wavelength >= assignment.wavelength_count {
            violations.push(Violation {
                kind: ViolationKind::Structure,
                detail: format!(
                    "arc {}->{} uses wavelength {} beyond the declared count {}",
                    arc.src, arc.dst, arc.wavelength, assignment.wavelength_count
                ),
            });
        }
    }

    // Pair coverage: every ordered (i, j), i != j, exactly once.
    let mut pair_count = vec![0usize; m * m];
    for arc in &assignment.arcs {
        if arc.src < m && arc.dst < m && arc.src != arc.dst {
            pair_count[arc.src * m + arc.dst] += 1;
        }
    }
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            match pair_count[i * m + j] {
                0 => violations.push(Violation {
                    kind: ViolationKind::Missing,
                    detail: format!("pair ({i},{j}) has no arc"),
                }),
                1 => {}
                k => violations.push(Violation {
                    kind: ViolationKind::Duplicate,
                    detail: format!("pair ({i},{j}) has {k} arcs"),
                }),
            }
        }
    }

    // Segment exclusivity per (direction, wavelength).
    for direction in [Direction::Clockwise, Direction::CounterClockwise] {
        for w in 0..assignment.wavelength_count {
            let mut occupant: Vec<Option<(usize, usize)>> = vec![None; m];
            for arc in &assignment.arcs {
                if arc.direction != direction || arc.wavelength != w {
                    continue;
                }
                for &s in &arc.segments {
                    if s >= m {
                        continue;
                    }
                    match occupant[s] {
                        None => occupant[s] = Some((arc.src, arc.dst)),
                        Some((ps, pd)) => violations.push(Violation {
                            kind: ViolationKind::Overlap,
                            detail: format!(
                                "wavelength {w} direction {}: arcs {ps}->{pd} and {}->{} share segment {s}",
                                direction.label(),
                                arc.src,
                                arc.dst
                            ),
                        }),
                    }
                }
            }
        }
    }

    match assignment.mode {
        RingMode::C => {
            for arc in &assignment.arcs {
                if arc.direction != Direction::Clockwise {
                    violations.push(Violation {
                        kind: ViolationKind::Structure,
                        detail: format!(
                            "single-direction ring carries arc {}->{} counter-clockwise",
                            arc.src, arc.dst
                        ),
                    });
                }
            }
        }
        RingMode::CCC => {
            let half = m / 2;
            for arc in &assignment.arcs {
                if arc.segments.len() > half {
                    violations.push(Violation {
                        kind: ViolationKind::Structure,
                        detail: format!(
                            "arc {}->{} spans {} segments, more than m/2 = {half}",
                            arc.src,
                            arc.dst,
                            arc.segments.len()
                        ),
                    });
                }
            }
            for i in 0..m {
                for j in (i + 1)..m {
                    let fwd = assignment.arcs.iter().find(|a| a.src == i && a.dst == j);
                    let rev = assignment.arcs.iter().find(|a| a.src == j && a.dst == i);
                    if let (Some(fwd), Some(rev)) = (fwd, rev) {
                        if fwd.wavelength != rev.wavelength {
                            violations.push(Violation {
                                kind: ViolationKind::Structure,
                                detail: format!(
                                    "pair {{{i},{j}}} rides wavelengths {} and {}",
                                    fwd.wavelength, rev.wavelength
                                ),
                            });
                        }
                        if fwd.direction == rev.direction {
                            violations.push(Violation {
                                kind: ViolationKind::Structure,
                                detail: format!(
                                    "pair {{{i},{j}}} rides the same direction both ways"
                                ),
                            });
                        }
                    }
                }
            }
        }
    }

    violations
}

/// Waveguides needed to carry `total_wavelengths` signals when each
/// waveguide holds at most `cap_per_waveguide`: the ceiling of the ratio.
pub fn partition_waveguides(
    total_wavelengths: u64,
    cap_per_waveguide: u64,
) -> Result<u64, ModelError> {
    if cap_per_waveguide == 0 {
        return Err(ModelError::ZeroWaveguideCapacity);
    }
    Ok(total_wavelengths.div_ceil(cap_per_waveguide))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clockwise_walk_convention() {
        // clockwise travel decreases the position index
        assert_eq!(clockwise_segments(4, 1, 0), vec![0]);
        assert_eq!(clockwise_segments(4, 0, 2), vec![3, 2]);
        assert_eq!(counter_clockwise_segments(4, 2, 0), vec![2, 3]);
        assert_eq!(counter_clockwise_segments(4, 0, 1), vec![0]);
    }

    #[test]
    fn assign_c_four_ports() {
        let a = assign_c(4).unwrap();
        assert_eq!(a.wavelength_count, 6);
        assert!(validate(&a).is_empty());
        // lexicographic pair numbering reproduces the published matrix
        let wavelength_of = |i: usize, j: usize| {
            a.arcs
                .iter()
                .find(|arc| arc.src == i && arc.dst == j)
                .unwrap()
                .wavelength
        };
        assert_eq!(wavelength_of(0, 1), 0);
        assert_eq!(wavelength_of(0, 2), 1);
        assert_eq!(wavelength_of(0, 3), 2);
        assert_eq!(wavelength_of(1, 2), 3);
        assert_eq!(wavelength_of(1, 3), 4);
        assert_eq!(wavelength_of(2, 3), 5);
        // symmetric: both directions of a pair share the wavelength
        assert_eq!(wavelength_of(2, 1), 3);
    }

    #[test]
    fn assign_c_two_ports() {
        let a = assign_c(2).unwrap();
        assert_eq!(a.wavelength_count, 1);
        assert_eq!(a.arcs.len(), 2);
        assert!(a.arcs.iter().any(|arc| arc.src == 0 && arc.dst == 1));
        assert!(a.arcs.iter().any(|arc| arc.src == 1 && arc.dst == 0));
        assert!(validate(&a).is_empty());
    }

    #[test]
    fn assign_c_counts_match_pair_enumeration() {
        for m in [2usize, 3, 4, 7, 16, 64] {
            let a = assign_c(m).unwrap();
            let mut pairs = 0;
            for i in 0..m {
                for j in 0..m {
                    if i < j {
                        pairs += 1;
                    }
                }
            }
            assert_eq!(a.wavelength_count, pairs, "m={m}");
            assert_eq!(a.wavelength_count, m * (m - 1) / 2, "m={m}");
        }
        assert_eq!(assign_c(64).unwrap().wavelength_count, 2016);
    }

    #[test]
    fn assign_c_wavelengths_tile_the_ring() {
        for m in [2usize, 4, 5, 8] {
            let a = assign_c(m).unwrap();
            for w in 0..a.wavelength_count {
                let mut covered = vec![false; m];
                for arc in a.arcs.iter().filter(|arc| arc.wavelength == w) {
                    for &s in &arc.segments {
                        assert!(!covered[s], "m={m} w={w} segment {s} reused");
                        covered[s] = true;
                    }
                }
                assert!(covered.iter().all(|&c| c), "m={m} w={w} leaves a gap");
            }
        }
    }

    #[test]
    fn assign_c_rejects_tiny_rings() {
        assert_eq!(assign_c(1).unwrap_err(), ModelError::PortCountTooSmall(1));
        assert_eq!(assign_c(0).unwrap_err(), ModelError::PortCountTooSmall(0));
    }

    #[test]
    fn assign_ccc_four_ports() {
        let a = assign_ccc(4).unwrap();
        assert_eq!(a.wavelength_count, 3);
        assert!(validate(&a).is_empty());
    }

    #[test]
    fn assign_ccc_two_ports() {
        let a = assign_ccc(2).unwrap();
        assert_eq!(a.wavelength_count, 1);
        assert!(validate(&a).is_empty());
    }

    #[test]
    fn assign_ccc_sixteen_ports() {
        let a = assign_ccc(16).unwrap();
        assert!(a.wavelength_count <= 60, "got {}", a.wavelength_count);
        assert!(validate(&a).is_empty());
    }

    #[test]
    fn assign_ccc_rejects_odd_ports() {
        assert_eq!(assign_ccc(5).unwrap_err(), ModelError::PortCountOdd(5));
        assert_eq!(assign_ccc(1).unwrap_err(), ModelError::PortCountTooSmall(1));
    }

    #[test]
    fn assign_ccc_pairs_are_symmetric_and_opposed() {
        for m in [2usize, 4, 6, 10] {
            let a = assign_ccc(m).unwrap();
            for i in 0..m {
                for j in (i + 1)..m {
                    let fwd = a.arcs.iter().find(|x| x.src == i && x.dst == j).unwrap();
                    let rev = a.arcs.iter().find(|x| x.src == j && x.dst == i).unwrap();
                    assert_eq!(fwd.wavelength, rev.wavelength);
                    assert_ne!(fwd.direction, rev.direction);
                    assert!(fwd.segments.len() <= m / 2);
                    assert!(rev.segments.len() <= m / 2);
                }
            }
        }
    }

    #[test]
    fn assign_ccc_ties_cross_the_closing_edge() {
        // The m/2-hop pairs route clockwise from the smaller index, which
        // wraps across segment m-1.
        for m in [4usize, 8, 12] {
            let a = assign_ccc(m).unwrap();
            for i in 0..m / 2 {
                let j = i + m / 2;
                let arc = a.arcs.iter().find(|x| x.src == i && x.dst == j).unwrap();
                assert_eq!(arc.direction, Direction::Clockwise, "m={m} pair ({i},{j})");
                assert!(
                    arc.segments.contains(&(m - 1)),
                    "m={m} tie arc {i}->{j} misses the closing edge"
                );
            }
        }
    }

    #[test]
    fn assignments_are_deterministic() {
        for m in [4usize, 10, 16] {
            assert_eq!(assign_c(m).unwrap(), assign_c(m).unwrap());
            assert_eq!(assign_ccc(m).unwrap(), assign_ccc(m).unwrap());
        }
    }

    #[test]
    fn hand_built_overlap_is_reported() {
        // Two same-wavelength, same-direction arcs whose segment sets
        // intersect in segment 1.
        let a = RingAssignment {
            ports: 4,
            mode: RingMode::C,
            arcs: vec![
                Arc {
                    src: 0,
                    dst: 2,
                    wavelength: 0,
                    direction: Direction::Clockwise,
                    segments: vec![0, 1],
                },
                Arc {
                    src: 1,
                    dst: 3,
                    wavelength: 0,
                    direction: Direction::Clockwise,
                    segments: vec![1, 2],
                },
            ],
            wavelength_count: 1,
        };
        let violations = validate(&a);
        let overlap = violations
            .iter()
            .find(|v| v.kind == ViolationKind::Overlap)
            .expect("overlap detected");
        assert!(overlap.detail.contains("segment 1"), "{}", overlap.detail);
    }

    #[test]
    fn missing_pair_is_reported() {
        let mut a = assign_c(3).unwrap();
        a.arcs.retain(|arc| !(arc.src == 2 && arc.dst == 1));
        let violations = validate(&a);
        assert!(violations
            .iter()
            .any(|v| v.kind == ViolationKind::Missing && v.detail.contains("(2,1)")));
    }

    #[test]
    fn duplicate_pair_is_reported() {
        let mut a = assign_c(3).unwrap();
        let copy = a.arcs[0].clone();
        a.arcs.push(copy);
        let violations = validate(&a);
        assert!(violations
            .iter()
            .any(|v| v.kind == ViolationKind::Duplicate));
    }

    #[test]
    fn structural_breaches_are_reported() {
        let mut a = assign_ccc(4).unwrap();
        // force a pair onto two different wavelengths
        let idx = a
            .arcs
            .iter()
            .position(|arc| arc.direction == Direction::CounterClockwise)
            .unwrap();
        a.arcs[idx].wavelength = (a.arcs[idx].wavelength + 1) % a.wavelength_count;
        assert!(validate(&a)
            .iter()
            .any(|v| v.kind == ViolationKind::Structure));

        let mut b = assign_c(4).unwrap();
        b.arcs[0].direction = Direction::CounterClockwise;
        assert!(validate(&b)
            .iter()
            .any(|v| v.kind == ViolationKind::Structure));
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partition_waveguides(1008, 64).unwrap(), 16);
        assert_eq!(partition_waveguides(1008, 16).unwrap(), 63);
        assert_eq!(partition_waveguides(6, 8).unwrap(), 1);
        assert_eq!(
            partition_waveguides(5, 0).unwrap_err(),
            ModelError::ZeroWaveguideCapacity
        );
    }
}
