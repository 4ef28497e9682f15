//! Exhaustive symplectic verification of the encoded-operator relations:
//! the local (anti)commutation rules, the loop condition, stabilizer
//! consistency, and the per-case Majorana/hole/logical contracts. No
//! matrices are built, so lattice size is unbounded.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::encoder::CompactEncoding;
use crate::error::Result;
use crate::hex::HexEncoding;
use crate::lattice::{DirectedEdge, Lattice, LatticeCase, Vertex};
use crate::pauli::PauliString;
use crate::stabilizer::StabilizerGroup;

const MAX_RECORDED_FAILURES: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub lattice: String,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

struct CheckBuilder {
    name: String,
    checked: usize,
    failures: Vec<String>,
    failed: bool,
}

impl CheckBuilder {
    fn new(name: &str) -> Self {
        CheckBuilder {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
            failed: false,
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed = true;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn finish(self) -> RelationCheck {
        RelationCheck {
            name: self.name,
            passed: !self.failed,
            checked: self.checked,
            failures: self.failures,
        }
    }
}

/// Edge/vertex operator tables plus the stabilizer group, in one shape the
/// generic checks can consume.
struct OperatorTables<'a> {
    edges: Vec<(DirectedEdge, PauliString)>,
    vertices: Vec<(Vertex, PauliString)>,
    stabs: &'a StabilizerGroup,
    expected_generators: usize,
}

fn check_edge_vertex(t: &OperatorTables) -> RelationCheck {
    let mut c = CheckBuilder::new("edge operators anticommute with exactly their endpoints");
    for (d, e) in &t.edges {
        for (v, vop) in &t.vertices {
            let incident = d.tail == *v || d.head == *v;
            let anti = e.anticommutes(vop).unwrap();
            c.expect(anti == incident, || {
                format!("edge {d} vs vertex {v}: expected anticommute={incident}")
            });
        }
    }
    c.finish()
}

fn check_edge_edge(t: &OperatorTables) -> RelationCheck {
    let mut c =
        CheckBuilder::new("edge pairs anticommute iff they share exactly one vertex");
    for (i, (da, a)) in t.edges.iter().enumerate() {
        for (db, b) in t.edges.iter().skip(i + 1) {
            let shared = [da.tail, da.head]
                .iter()
                .filter(|v| db.tail == **v || db.head == **v)
                .count();
            let anti = a.anticommutes(b).unwrap();
            c.expect(anti == (shared == 1), || {
                format!("edges {da} and {db} share {shared} vertices")
            });
        }
    }
    c.finish()
}

fn check_vertex_vertex(t: &OperatorTables) -> RelationCheck {
    let mut c = CheckBuilder::new("vertex operators pairwise commute");
    for (i, (va, a)) in t.vertices.iter().enumerate() {
        for (vb, b) in t.vertices.iter().skip(i + 1) {
            c.expect(a.commutes(b).unwrap(), || format!("{va} vs {vb}"));
        }
    }
    c.finish()
}

fn check_stabilizers(t: &OperatorTables) -> Vec<RelationCheck> {
    let mut mutual = CheckBuilder::new("stabilizer generators pairwise commute, none trivial");
    let gens = t.stabs.generators();
    for (i, a) in gens.iter().enumerate() {
        mutual.expect(!a.is_scalar(), || format!("generator {i} is scalar"));
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            mutual.expect(a.commutes(b).unwrap(), || {
                format!("generators {i} and {j} anticommute")
            });
        }
    }
    let mut count = CheckBuilder::new("independent generator count matches the face count");
    count.expect(t.stabs.n_nontrivial() == t.expected_generators, || {
        format!(
            "{} generators, expected {}",
            t.stabs.n_nontrivial(),
            t.expected_generators
        )
    });
    let mut central = CheckBuilder::new("stabilizers commute with all edge and vertex operators");
    for g in gens {
        for (d, e) in &t.edges {
            central.expect(g.commutes(e).unwrap(), || format!("generator vs edge {d}"));
        }
        for (v, vop) in &t.vertices {
            central.expect(g.commutes(vop).unwrap(), || {
                format!("generator vs vertex {v}")
            });
        }
    }
    vec![mutual.finish(), count.finish(), central.finish()]
}

/// All simple cycles of length at most `max_len`, canonicalized: the start is
/// the smallest vertex and the second vertex is smaller than the last.
fn simple_cycles(adj: &BTreeMap<Vertex, Vec<Vertex>>, max_len: usize) -> Vec<Vec<Vertex>> {
    let mut cycles = Vec::new();
    let verts: Vec<Vertex> = adj.keys().copied().collect();
    for &start in &verts {
        let mut path = vec![start];
        dfs_cycles(adj, start, &mut path, max_len, &mut cycles);
    }
    cycles
}

fn dfs_cycles(
    adj: &BTreeMap<Vertex, Vec<Vertex>>,
    start: Vertex,
    path: &mut Vec<Vertex>,
    max_len: usize,
    cycles: &mut Vec<Vec<Vertex>>,
) {
    let cur = *path.last().unwrap();
    for &next in &adj[&cur] {
        if next == start {
            if path.len() >= 3 && path[1] < *path.last().unwrap() {
                cycles.push(path.clone());
            }
            continue;
        }
        if next < start || path.contains(&next) || path.len() == max_len {
            continue;
        }
        path.push(next);
        dfs_cycles(adj, start, path, max_len, cycles);
        path.pop();
    }
}

fn adjacency(edges: &[DirectedEdge]) -> BTreeMap<Vertex, Vec<Vertex>> {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for e in edges {
        adj.entry(e.tail).or_default().push(e.head);
        adj.entry(e.head).or_default().push(e.tail);
    }
    adj
}

pub fn verify_square(enc: &CompactEncoding) -> Result<RelationReport> {
    let lat = enc.lattice();
    let tables = OperatorTables {
        edges: enc.edge_ops().map(|(d, op)| (d, op.clone())).collect(),
        vertices: enc.vertex_ops().map(|(v, op)| (v, op.clone())).collect(),
        stabs: enc.stabilizers(),
        expected_generators: lat.even_faces().len(),
    };
    let mut checks = vec![
        check_edge_vertex(&tables),
        check_edge_edge(&tables),
        check_vertex_vertex(&tables),
    ];

    // loop condition: odd faces close to +identity, even faces to generators
    let mut odd_loops = CheckBuilder::new("odd-face loops equal +identity exactly");
    for f in lat.odd_faces() {
        let lp = enc.face_loop(f)?;
        odd_loops.expect(lp.is_identity(), || format!("{f}: got {lp}"));
    }
    checks.push(odd_loops.finish());

    let mut even_loops = CheckBuilder::new("even-face loops are the nontrivial stabilizers");
    for (f, g) in lat.even_faces().into_iter().zip(enc.stabilizers().generators()) {
        let lp = enc.face_loop(f)?;
        even_loops.expect(lp == *g && !lp.is_scalar() && lp.is_hermitian(), || {
            format!("{f}: got {lp}")
        });
    }
    checks.push(even_loops.finish());

    checks.extend(check_stabilizers(&tables));

    // every short cycle's loop operator lies in the stabilizer group
    let mut cycles_check =
        CheckBuilder::new("loops over 4-, 6- and 8-cycles lie in the stabilizer group");
    let adj = adjacency(&lat.edges());
    for cycle in simple_cycles(&adj, 8) {
        let mut path = cycle.clone();
        path.push(cycle[0]);
        let lp = enc.loop_operator(&path)?;
        cycles_check.expect(enc.stabilizers().contains(&lp)?, || {
            format!("cycle through {} has loop {lp}", cycle[0])
        });
    }
    checks.push(cycles_check.finish());

    // case contracts
    let case = lat.classify().case;
    match case {
        LatticeCase::II => {
            let mut c = CheckBuilder::new("case II: no Majorana corners, total parity in group");
            c.expect(enc.majorana_corners().is_empty(), || {
                "majorana corner exists in case II".into()
            });
            c.expect(
                enc.stabilizers().contains(&enc.total_vertex_parity())?,
                || "prod V_j is not a stabilizer element".into(),
            );
            checks.push(c.finish());
        }
        LatticeCase::I | LatticeCase::III => {
            let corners = enc.majorana_corners();
            let mut c = CheckBuilder::new("Majorana corner contract");
            let expected = if case == LatticeCase::I { 2 } else { 4 };
            c.expect(corners.len() == expected, || {
                format!("{} corners, expected {expected}", corners.len())
            });
            for (v, gamma) in &corners {
                c.expect(
                    gamma
                        .anticommutes(&enc.vertex_operator(*v).unwrap())
                        .unwrap(),
                    || format!("gamma at {v} commutes with its vertex operator"),
                );
                for (d, e) in &tables.edges {
                    let incident = d.tail == *v || d.head == *v;
                    c.expect(gamma.anticommutes(e).unwrap() == incident, || {
                        format!("gamma at {v} vs edge {d}")
                    });
                }
                for g in enc.stabilizers().generators() {
                    c.expect(gamma.commutes(g).unwrap(), || {
                        format!("gamma at {v} anticommutes with a stabilizer")
                    });
                }
            }
            checks.push(c.finish());

            // hole contract and path independence at a middle site
            let mut h = CheckBuilder::new("hole operator contract and path independence");
            let site = Vertex::new(lat.width() / 2, lat.height() / 2);
            let hole = enc.hole_operator(site, None)?;
            h.expect(
                hole.anticommutes(&enc.vertex_operator(site).unwrap())
                    .unwrap(),
                || "hole commutes with its vertex operator".into(),
            );
            for (d, e) in &tables.edges {
                let incident = d.tail == site || d.head == site;
                h.expect(hole.anticommutes(e).unwrap() == incident, || {
                    format!("hole vs edge {d}")
                });
            }
            for g in enc.stabilizers().generators() {
                h.expect(hole.commutes(g).unwrap(), || {
                    "hole anticommutes with a stabilizer".into()
                });
            }
            let (corner, _) = enc.inject_majorana()?;
            let mut row_first = vec![corner];
            let mut cur = corner;
            while cur.x != site.x {
                cur.x = if cur.x < site.x { cur.x + 1 } else { cur.x - 1 };
                row_first.push(cur);
            }
            while cur.y != site.y {
                cur.y = if cur.y < site.y { cur.y + 1 } else { cur.y - 1 };
                row_first.push(cur);
            }
            let other = enc.hole_operator(site, Some(&row_first))?;
            h.expect(enc.stabilizers().equal_up_to_group(&hole, &other)?, || {
                "holes along different paths differ by more than a stabilizer".into()
            });
            checks.push(h.finish());

            if case == LatticeCase::I {
                // the unchosen corner's weight-1 operator is the hole there,
                // up to a sign and stabilizers
                let mut s = CheckBuilder::new("case I: second corner is the hole counterpart");
                let (c2, gamma2) = corners[1].clone();
                let hole2 = enc.hole_operator(c2, None)?;
                let same = enc.stabilizers().equal_up_to_group(&gamma2, &hole2)?
                    || enc
                        .stabilizers()
                        .equal_up_to_group(&gamma2.negated(), &hole2)?;
                s.expect(same, || format!("corner {c2} operator is unrelated to its hole"));
                checks.push(s.finish());
            }

            if case == LatticeCase::III {
                let mut l = CheckBuilder::new("case III: logical qubit contract");
                let lq = enc.logical_paulis()?;
                l.expect(lq.x.anticommutes(&lq.y).unwrap(), || "X,Y commute".into());
                l.expect(lq.y.anticommutes(&lq.z).unwrap(), || "Y,Z commute".into());
                l.expect(lq.x.anticommutes(&lq.z).unwrap(), || "X,Z commute".into());
                l.expect(lq.x.mul(&lq.y).unwrap() == lq.z.times_i(), || {
                    "X*Y != iZ".into()
                });
                for (name, op) in [("X", &lq.x), ("Y", &lq.y), ("Z", &lq.z)] {
                    for g in enc.stabilizers().generators() {
                        l.expect(op.commutes(g).unwrap(), || {
                            format!("logical {name} vs stabilizer")
                        });
                    }
                    for (d, e) in &tables.edges {
                        l.expect(op.commutes(e).unwrap(), || {
                            format!("logical {name} vs edge {d}")
                        });
                    }
                    for (v, vop) in &tables.vertices {
                        l.expect(op.commutes(vop).unwrap(), || {
                            format!("logical {name} vs vertex {v}")
                        });
                    }
                }
                checks.push(l.finish());
            }
        }
    }

    Ok(RelationReport {
        lattice: format!(
            "square {}x{} phase {} (case {})",
            lat.width(),
            lat.height(),
            lat.checkerboard_phase(),
            case
        ),
        checks,
    })
}

pub fn verify_hex(enc: &HexEncoding) -> Result<RelationReport> {
    let lat = enc.lattice();
    let tables = OperatorTables {
        edges: enc.edge_ops().map(|(d, op)| (d, op.clone())).collect(),
        vertices: enc.vertex_ops().map(|(v, op)| (v, op.clone())).collect(),
        stabs: enc.stabilizers(),
        expected_generators: lat.face_count(),
    };
    let mut checks = vec![
        check_edge_vertex(&tables),
        check_edge_edge(&tables),
        check_vertex_vertex(&tables),
    ];

    let mut face_loops = CheckBuilder::new("face loops are the stabilizer generators");
    for (f, g) in enc.lattice().faces().zip(enc.stabilizers().generators()) {
        let lp = enc.face_loop(f)?;
        face_loops.expect(lp == *g && !lp.is_scalar() && lp.is_hermitian(), || {
            format!("{f}: got {lp}")
        });
    }
    checks.push(face_loops.finish());

    checks.extend(check_stabilizers(&tables));

    let mut cycles_check =
        CheckBuilder::new("loops over 6- and 8-cycles lie in the stabilizer group");
    let adj = adjacency(lat.edges());
    for cycle in simple_cycles(&adj, 8) {
        let mut path = cycle.clone();
        path.push(cycle[0]);
        let lp = enc.loop_operator(&path)?;
        cycles_check.expect(enc.stabilizers().contains(&lp)?, || {
            format!("cycle through {} has loop {lp}", cycle[0])
        });
    }
    checks.push(cycles_check.finish());

    let mut m = CheckBuilder::new("hex Majorana corner contract");
    let corners = enc.majorana_corners();
    m.expect(!corners.is_empty(), || "no injection corner found".into());
    for (v, gamma) in &corners {
        m.expect(
            gamma
                .anticommutes(&enc.vertex_operator(*v).unwrap())
                .unwrap(),
            || format!("gamma at {v} commutes with its vertex operator"),
        );
        for (d, e) in &tables.edges {
            let incident = d.tail == *v || d.head == *v;
            m.expect(gamma.anticommutes(e).unwrap() == incident, || {
                format!("gamma at {v} vs edge {d}")
            });
        }
        for g in enc.stabilizers().generators() {
            m.expect(gamma.commutes(g).unwrap(), || {
                format!("gamma at {v} anticommutes with a stabilizer")
            });
        }
    }
    checks.push(m.finish());

    Ok(RelationReport {
        lattice: format!(
            "hex {}x{} faces",
            lat.face_columns(),
            lat.face_rows()
        ),
        checks,
    })
}

/// Run the full relation suite for a lattice with the standard conventions.
pub fn verify_relations(lattice: &Lattice) -> Result<RelationReport> {
    match lattice {
        Lattice::Square(sq) => verify_square(&CompactEncoding::new(sq.clone())?),
        Lattice::Hex(hx) => verify_hex(&HexEncoding::new(hx.clone())?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoder::SignConvention;
    use crate::lattice::SquareLattice;

    #[test]
    fn suite_passes_on_a_6x6_both_phases() {
        for phase in [0, 1] {
            let lat = Lattice::Square(SquareLattice::new(6, 6, phase).unwrap());
            let report = verify_relations(&lat).unwrap();
            assert!(report.all_passed(), "{:#?}", report.failed_checks());
        }
    }

    #[test]
    fn suite_passes_on_hex_2x2() {
        let lat = Lattice::Hex(crate::hex::HexLattice::new(2, 2).unwrap());
        let report = verify_relations(&lat).unwrap();
        assert!(report.all_passed(), "{:#?}", report.failed_checks());
    }

    #[test]
    fn flipped_sign_convention_is_detected() {
        let sq = SquareLattice::new(4, 4, 0).unwrap();
        let enc =
            CompactEncoding::with_sign_convention(sq, SignConvention::VerticalFlipped).unwrap();
        let report = verify_square(&enc).unwrap();
        let odd = report
            .checks
            .iter()
            .find(|c| c.name.contains("odd-face"))
            .unwrap();
        assert!(!odd.passed);
        assert!(odd.failures[0].contains("-I"), "{:?}", odd.failures);
    }

    #[test]
    fn cycle_enumeration_counts_on_a_grid() {
        // 3x3 grid graph: 4 squares (len 4), 4 dominoes (len 6),
        // and the 2x2 blocks plus bent 8-cycles
        let lat = SquareLattice::new(3, 3, 0).unwrap();
        let adj = adjacency(&lat.edges());
        let cycles = simple_cycles(&adj, 8);
        let by_len = |l: usize| cycles.iter().filter(|c| c.len() == l).count();
        assert_eq!(by_len(4), 4);
        assert_eq!(by_len(6), 4);
        assert!(by_len(8) >= 5);
        assert_eq!(by_len(3), 0);
        assert_eq!(by_len(5), 0);
    }
}
