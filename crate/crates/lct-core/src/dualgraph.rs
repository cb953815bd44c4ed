//! Resolution dual graphs: schema validation, intersection matrices,
//! negative definiteness, Laufer fundamental cycles, elliptic invariants,
//! and the boundary discrepancy systems cut out by curves marked `C1`/`C2`.

use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Vertex decoration. `Circle`, `Star`, and `Bullet` label exceptional
/// curves (with self-intersections -3, -2 or -3, and -2 respectively);
/// `C1` and `C2` mark boundary curves that feed the discrepancy system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mark {
    #[serde(rename = "circle")]
    Circle,
    #[serde(rename = "star")]
    Star,
    #[serde(rename = "bullet")]
    Bullet,
    C1,
    C2,
}

/// One curve of the configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Vertex {
    pub id: String,
    pub self_int: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mark: Option<Mark>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<Vertex>,
    edges: Vec<[String; 2]>,
}

/// A validated configuration of curves: vertices sorted by id, simple
/// unordered edges, connected, self-intersections at most -2, and the mark
/// conventions enforced (`circle` is -3, `bullet` is -2, `star` is -2 or
/// -3, at most one each of `circle`, `C1`, `C2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl DualGraph {
    /// Parses and validates the JSON form:
    /// `{"vertices": [{"id", "selfInt", "mark"?}, ...], "edges": [[id, id], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        Self::from_parts(file.vertices, &file.edges)
    }

    /// Builds and validates a graph from vertex records and id pairs.
    pub fn from_parts(mut vertices: Vec<Vertex>, edges: &[[String; 2]]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidGraph("no vertices".to_string()));
        }
        vertices.sort_by(|a, b| a.id.cmp(&b.id));
        for pair in vertices.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(Error::InvalidGraph(format!(
                    "duplicate vertex id {:?}",
                    pair[0].id
                )));
            }
        }
        for v in &vertices {
            if v.self_int > -2 {
                return Err(Error::InvalidGraph(format!(
                    "vertex {:?} has self-intersection {}; at most -2 is allowed",
                    v.id, v.self_int
                )));
            }
            let ok = match v.mark {
                Some(Mark::Circle) => v.self_int == -3,
                Some(Mark::Star) => v.self_int == -3 || v.self_int == -2,
                Some(Mark::Bullet) => v.self_int == -2,
                Some(Mark::C1) | Some(Mark::C2) | None => true,
            };
            if !ok {
                return Err(Error::InvalidGraph(format!(
                    "vertex {:?} has self-intersection {} incompatible with its mark",
                    v.id, v.self_int
                )));
            }
        }
        for mark in [Mark::Circle, Mark::C1, Mark::C2] {
            if vertices.iter().filter(|v| v.mark == Some(mark)).count() > 1 {
                return Err(Error::InvalidGraph(format!(
                    "more than one vertex marked {mark:?}"
                )));
            }
        }

        let index: std::collections::HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.as_str(), i))
            .collect();
        let index_of = |id: &str| index.get(id).copied();
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for pair in edges {
            let a = index_of(&pair[0])
                .ok_or_else(|| Error::InvalidGraph(format!("edge endpoint {:?} unknown", pair[0])))?;
            let b = index_of(&pair[1])
                .ok_or_else(|| Error::InvalidGraph(format!("edge endpoint {:?} unknown", pair[1])))?;
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {:?}", pair[0])));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort();
        for pair in normalized.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge between {:?} and {:?}",
                    vertices[pair[0].0].id, vertices[pair[0].1].id
                )));
            }
        }

        let mut adjacency = vec![Vec::new(); vertices.len()];
        for &(a, b) in &normalized {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }

        let graph = Self {
            vertices,
            edges: normalized,
            adjacency,
        };
        if !graph.is_connected_subset(&(0..graph.vertices.len()).collect::<Vec<_>>()) {
            return Err(Error::InvalidGraph("graph is not connected".to_string()));
        }
        Ok(graph)
    }

    /// Canonical JSON (vertices in sorted order).
    pub fn to_json(&self) -> String {
        let file = GraphFile {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| [self.vertices[a].id.clone(), self.vertices[b].id.clone()])
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("graph serializes")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(&j)
    }

    /// Intersection matrix over all vertices in sorted-id order:
    /// self-intersections on the diagonal, 1 for each edge.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, v) in self.vertices.iter().enumerate() {
            m[i][i] = v.self_int;
        }
        for &(a, b) in &self.edges {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    fn is_connected_subset(&self, subset: &[usize]) -> bool {
        if subset.is_empty() {
            return false;
        }
        let mut member = vec![false; self.vertices.len()];
        for &i in subset {
            member[i] = true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![subset[0]];
        seen[subset[0]] = true;
        while let Some(i) = stack.pop() {
            for &j in &self.adjacency[i] {
                if member[j] && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        subset.iter().all(|&i| seen[i])
    }

    /// Indices of the exceptional vertices (everything not marked `C1` or
    /// `C2`), in sorted-id order.
    pub fn exceptional_indices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| !matches!(self.vertices[i].mark, Some(Mark::C1) | Some(Mark::C2)))
            .collect()
    }

    fn submatrix(&self, subset: &[usize]) -> Vec<Vec<i64>> {
        subset
            .iter()
            .map(|&i| {
                subset
                    .iter()
                    .map(|&j| {
                        if i == j {
                            self.vertices[i].self_int
                        } else if self.adjacent(i, j) {
                            1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Exact negative-definiteness test: the leading principal minors must
/// alternate in sign starting negative. Minors are computed fraction-free
/// over `BigInt` (the Bareiss pivots are exactly the leading minors), so a
/// zero pivot is itself a verdict: some leading minor vanishes and the
/// matrix cannot be definite.
pub fn is_negative_definite(matrix: &[Vec<i64>]) -> bool {
    let n = matrix.len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "square matrix");
            row.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        let expected_positive = (k + 1) % 2 == 0;
        if pivot.is_zero() || pivot.is_positive() != expected_positive {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &pivot - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division is exact");
                m[i][j] = num / &prev;
            }
        }
        prev = pivot;
    }
    true
}

/// The fundamental cycle of the exceptional part, with its intersection
/// numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FundamentalCycle {
    /// Ids of the exceptional vertices, sorted.
    pub ids: Vec<String>,
    /// Coefficient of each curve in the cycle (all at least 1).
    pub coefficients: Vec<u64>,
    /// `Z . A_i` for each exceptional curve; all at most 0.
    pub pairings: Vec<i64>,
    /// Self-intersection `Z . Z`.
    pub z_squared: i64,
}

/// Computes the fundamental cycle of the exceptional part by Laufer's
/// algorithm: start from the all-ones cycle and repeatedly add any curve
/// with positive pairing (lowest id first) until the cycle is anti-nef.
///
/// Negative definiteness of the exceptional intersection matrix is checked
/// first; it guarantees termination and minimality. Boundary-marked
/// vertices (`C1`, `C2`) are excluded from the cycle.
pub fn fundamental_cycle(graph: &DualGraph) -> Result<FundamentalCycle> {
    let subset = graph.exceptional_indices();
    if subset.is_empty() {
        return Err(Error::InvalidGraph(
            "no exceptional vertices outside the boundary marks".to_string(),
        ));
    }
    if !graph.is_connected_subset(&subset) {
        return Err(Error::InvalidGraph(
            "exceptional part is not connected".to_string(),
        ));
    }
    let matrix = graph.submatrix(&subset);
    if !is_negative_definite(&matrix) {
        return Err(Error::NotNegativeDefinite);
    }

    let n = subset.len();
    let mut z = vec![1i128; n];
    let pairing = |z: &[i128], j: usize| -> i128 {
        (0..n).map(|i| z[i] * matrix[i][j] as i128).sum()
    };
    loop {
        let Some(j) = (0..n).find(|&j| pairing(&z, j) > 0) else {
            break;
        };
        z[j] += 1;
    }

    let pairings: Vec<i64> = (0..n)
        .map(|j| i64::try_from(pairing(&z, j)).expect("pairing fits i64"))
        .collect();
    let z_squared = (0..n).map(|i| z[i] * pairings[i] as i128).sum::<i128>();
    Ok(FundamentalCycle {
        ids: subset
            .iter()
            .map(|&i| graph.vertices()[i].id.clone())
            .collect(),
        coefficients: z.iter().map(|&c| c as u64).collect(),
        pairings,
        z_squared: i64::try_from(z_squared).expect("z^2 fits i64"),
    })
}

/// Numerical invariants of the fundamental cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EllipticInvariants {
    pub cycle: FundamentalCycle,
    /// `-Z.Z`, the degree of the singularity.
    pub degree: i64,
    /// `K.Z` computed from `K.A_i = -self_int - 2`.
    pub canonical_pairing: i64,
    /// Arithmetic genus `1 + (Z.Z + K.Z)/2`; 1 characterizes the elliptic
    /// case.
    pub arithmetic_genus: i64,
}

/// Computes degree, canonical pairing, and arithmetic genus of the
/// fundamental cycle.
pub fn elliptic_invariants(graph: &DualGraph) -> Result<EllipticInvariants> {
    let cycle = fundamental_cycle(graph)?;
    let subset = graph.exceptional_indices();
    let canonical_pairing: i128 = subset
        .iter()
        .zip(&cycle.coefficients)
        .map(|(&i, &zi)| (-graph.vertices()[i].self_int - 2) as i128 * zi as i128)
        .sum();
    let canonical_pairing = i64::try_from(canonical_pairing).expect("K.Z fits i64");
    let twice_genus_part = cycle.z_squared + canonical_pairing;
    // Adjunction makes Z.Z + K.Z even for any integral cycle.
    assert_eq!(twice_genus_part % 2, 0, "Z.Z + K.Z is even");
    Ok(EllipticInvariants {
        degree: -cycle.z_squared,
        canonical_pairing,
        arithmetic_genus: 1 + twice_genus_part / 2,
        cycle,
    })
}

/// A solved boundary discrepancy system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DiscrepancySystem {
    /// Ids of the interior vertices, sorted.
    pub ids: Vec<String>,
    /// Interior intersection matrix (all self-intersections -2).
    pub matrix: Vec<Vec<i64>>,
    /// Right-hand side: 1/2 per adjacency to `C1` plus 1/4 per adjacency
    /// to `C2`.
    #[serde(with = "crate::rat::vec")]
    pub rhs: Vec<BigRational>,
    /// Solution `r` of `matrix * r = rhs`.
    #[serde(with = "crate::rat::vec")]
    pub solution: Vec<BigRational>,
    /// Discrepancies `-r_i` of the interior curves.
    #[serde(with = "crate::rat::vec")]
    pub discrepancies: Vec<BigRational>,
}

/// Sets up and solves the boundary discrepancy system.
///
/// The boundary consists of the `C1` vertex (required, coefficient 1/2)
/// and optionally the `C2` vertex (coefficient 1/4). Interior vertices
/// must all be -2 curves; their matrix must be negative definite, which
/// makes the system uniquely solvable.
pub fn discrepancy_system(graph: &DualGraph) -> Result<DiscrepancySystem> {
    let c1 = graph
        .vertices()
        .iter()
        .position(|v| v.mark == Some(Mark::C1))
        .ok_or(Error::MissingBoundary)?;
    let c2 = graph
        .vertices()
        .iter()
        .position(|v| v.mark == Some(Mark::C2));
    let interior = graph.exceptional_indices();
    if interior.is_empty() {
        return Err(Error::InvalidGraph("no interior vertices".to_string()));
    }
    for &i in &interior {
        let v = &graph.vertices()[i];
        if v.self_int != -2 {
            return Err(Error::InteriorNotMinusTwo {
                id: v.id.clone(),
                self_int: v.self_int,
            });
        }
    }
    let matrix = graph.submatrix(&interior);
    if !is_negative_definite(&matrix) {
        return Err(Error::NotNegativeDefinite);
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let rhs: Vec<BigRational> = interior
        .iter()
        .map(|&i| {
            let mut b = BigRational::zero();
            if graph.adjacent(i, c1) {
                b += &half;
            }
            if let Some(c2) = c2 {
                if graph.adjacent(i, c2) {
                    b += &quarter;
                }
            }
            b
        })
        .collect();
    let rational_matrix: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let solution = solve_exact(rational_matrix, rhs.clone()).ok_or(Error::SingularSystem)?;
    let discrepancies = solution.iter().map(|r| -r).collect();
    Ok(DiscrepancySystem {
        ids: interior
            .iter()
            .map(|&i| graph.vertices()[i].id.clone())
            .collect(),
        matrix,
        rhs,
        solution,
        discrepancies,
    })
}

/// Log terminality of the solved system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KltVerdict {
    /// All solution entries below 1: discrepancies above -1.
    Klt,
    /// Maximum solution entry exactly 1: log canonical but not klt.
    LcNotKlt,
    /// Some solution entry above 1: not log canonical.
    NotLc,
}

/// Classifies the solved system by its largest solution entry.
pub fn klt_verdict(system: &DiscrepancySystem) -> KltVerdict {
    let one = BigRational::one();
    let max = system
        .solution
        .iter()
        .max()
        .expect("system has at least one vertex");
    if *max < one {
        KltVerdict::Klt
    } else if *max == one {
        KltVerdict::LcNotKlt
    } else {
        KltVerdict::NotLc
    }
}

/// Dense exact Gaussian elimination with partial pivoting over the
/// rationals. Returns `None` for a singular matrix.
pub(crate) fn solve_exact(
    mut m: Vec<Vec<BigRational>>,
    mut b: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let n = m.len();
    for row in &m {
        assert_eq!(row.len(), n, "square matrix");
    }
    assert_eq!(b.len(), n);
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[col][col];
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for c in row + 1..n {
            acc -= &m[row][c] * &x[c];
        }
        x[row] = acc / &m[row][row];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn q(text: &str) -> BigRational {
        BigRational::from_str(text).expect("rational")
    }

    fn chain(n: usize, self_int: i64) -> DualGraph {
        let vertices: Vec<Vertex> = (1..=n)
            .map(|i| Vertex {
                id: format!("a{i}"),
                self_int,
                mark: None,
            })
            .collect();
        let edges: Vec<[String; 2]> = (1..n)
            .map(|i| [format!("a{i}"), format!("a{}", i + 1)])
            .collect();
        DualGraph::from_parts(vertices, &edges).expect("chain is valid")
    }

    #[test]
    fn validation_rules() {
        let bad = DualGraph::from_json(
            r#"{"vertices":[{"id":"a","selfInt":-1}],"edges":[]}"#,
        );
        assert!(bad.is_err());
        let bad = DualGraph::from_json(
            r#"{"vertices":[{"id":"a","selfInt":-2},{"id":"a","selfInt":-2}],"edges":[]}"#,
        );
        assert!(bad.is_err());
        let bad = DualGraph::from_json(
            r#"{"vertices":[{"id":"a","selfInt":-2},{"id":"b","selfInt":-2}],"edges":[]}"#,
        );
        assert!(bad.is_err(), "disconnected");
        let bad = DualGraph::from_json(
            r#"{"vertices":[{"id":"a","selfInt":-2}],"edges":[["a","a"]]}"#,
        );
        assert!(bad.is_err(), "loop");
        let bad = DualGraph::from_json(
            r#"{"vertices":[{"id":"a","selfInt":-2},{"id":"b","selfInt":-2}],
                "edges":[["a","b"],["b","a"]]}"#,
        );
        assert!(bad.is_err(), "duplicate edge");
        let bad = DualGraph::from_json(
            r#"{"vertices":[{"id":"a","selfInt":-2,"mark":"circle"}],"edges":[]}"#,
        );
        assert!(bad.is_err(), "circle must be -3");
        let ok = DualGraph::from_json(
            r#"{"vertices":[{"id":"a","selfInt":-3,"mark":"circle"},
                            {"id":"b","selfInt":-2,"mark":"bullet"}],
                "edges":[["a","b"]]}"#,
        );
        assert!(ok.is_ok(), "{ok:?}");
    }

    #[test]
    fn negative_definiteness() {
        assert!(is_negative_definite(&chain(2, -2).intersection_matrix()));
        assert!(is_negative_definite(&chain(8, -2).intersection_matrix()));
        // An elliptic-curve-like single vertex of square 0 is not.
        assert!(!is_negative_definite(&[vec![0]]));
        assert!(!is_negative_definite(&[vec![2]]));
        // Affine A~1 (two -2 curves meeting twice) has determinant 0; the
        // schema forbids multi-edges, so test the matrix directly.
        assert!(!is_negative_definite(&[vec![-2, 2], vec![2, -2]]));
        assert!(is_negative_definite(&[vec![-2, 1], vec![1, -2]]));
    }

    #[test]
    fn fundamental_cycle_of_chains() {
        // An A_n chain has fundamental cycle all ones, Z^2 = -2.
        let cycle = fundamental_cycle(&chain(5, -2)).unwrap();
        assert_eq!(cycle.coefficients, vec![1, 1, 1, 1, 1]);
        assert_eq!(cycle.z_squared, -2);
        // A single -2 curve: Z = (1), Z^2 = -2.
        let cycle = fundamental_cycle(&chain(1, -2)).unwrap();
        assert_eq!(cycle.coefficients, vec![1]);
        assert_eq!(cycle.z_squared, -2);
    }

    #[test]
    fn fundamental_cycle_of_d4() {
        // Central -2 vertex with three -2 legs: Z has 2 in the center.
        let vertices = vec![
            Vertex { id: "c".into(), self_int: -2, mark: None },
            Vertex { id: "l1".into(), self_int: -2, mark: None },
            Vertex { id: "l2".into(), self_int: -2, mark: None },
            Vertex { id: "l3".into(), self_int: -2, mark: None },
        ];
        let edges = vec![
            ["c".to_string(), "l1".to_string()],
            ["c".to_string(), "l2".to_string()],
            ["c".to_string(), "l3".to_string()],
        ];
        let g = DualGraph::from_parts(vertices, &edges).unwrap();
        let cycle = fundamental_cycle(&g).unwrap();
        assert_eq!(cycle.ids, vec!["c", "l1", "l2", "l3"]);
        assert_eq!(cycle.coefficients, vec![2, 1, 1, 1]);
        assert_eq!(cycle.z_squared, -2);
    }

    #[test]
    fn laufer_needs_negative_definiteness() {
        // A cycle of -2 curves has determinant 0: not negative definite.
        let vertices: Vec<Vertex> = (1..=3)
            .map(|i| Vertex { id: format!("v{i}"), self_int: -2, mark: None })
            .collect();
        let edges = vec![
            ["v1".to_string(), "v2".to_string()],
            ["v2".to_string(), "v3".to_string()],
            ["v1".to_string(), "v3".to_string()],
        ];
        let g = DualGraph::from_parts(vertices, &edges).unwrap();
        assert!(matches!(
            fundamental_cycle(&g),
            Err(Error::NotNegativeDefinite)
        ));
    }

    #[test]
    fn discrepancy_chain_with_one_boundary() {
        // A_5 chain of -2 curves, C1 attached to the middle vertex.
        let mut vertices: Vec<Vertex> = (1..=5)
            .map(|i| Vertex { id: format!("a{i}"), self_int: -2, mark: None })
            .collect();
        vertices.push(Vertex { id: "c".into(), self_int: -3, mark: Some(Mark::C1) });
        let mut edges: Vec<[String; 2]> = (1..5)
            .map(|i| [format!("a{i}"), format!("a{}", i + 1)])
            .collect();
        edges.push(["a3".to_string(), "c".to_string()]);
        let g = DualGraph::from_parts(vertices, &edges).unwrap();
        let sys = discrepancy_system(&g).unwrap();
        assert_eq!(sys.ids, vec!["a1", "a2", "a3", "a4", "a5"]);
        assert_eq!(
            sys.solution,
            vec![q("-1/4"), q("-1/2"), q("-3/4"), q("-1/2"), q("-1/4")]
        );
        assert_eq!(sys.discrepancies[2], q("3/4"));
        assert_eq!(klt_verdict(&sys), KltVerdict::Klt);
    }

    #[test]
    fn discrepancy_chain_with_both_boundaries() {
        // A_4 chain, C1 on a3, C2 adjacent to a4.
        let mut vertices: Vec<Vertex> = (1..=4)
            .map(|i| Vertex { id: format!("a{i}"), self_int: -2, mark: None })
            .collect();
        vertices.push(Vertex { id: "c".into(), self_int: -3, mark: Some(Mark::C1) });
        vertices.push(Vertex { id: "d".into(), self_int: -2, mark: Some(Mark::C2) });
        let mut edges: Vec<[String; 2]> = (1..4)
            .map(|i| [format!("a{i}"), format!("a{}", i + 1)])
            .collect();
        edges.push(["a3".to_string(), "c".to_string()]);
        edges.push(["a4".to_string(), "d".to_string()]);
        let g = DualGraph::from_parts(vertices, &edges).unwrap();
        let sys = discrepancy_system(&g).unwrap();
        assert_eq!(sys.rhs, vec![q("0"), q("0"), q("1/2"), q("1/4")]);
        assert_eq!(
            sys.solution,
            vec![q("-1/4"), q("-1/2"), q("-3/4"), q("-1/2")]
        );
        assert_eq!(klt_verdict(&sys), KltVerdict::Klt);
    }

    #[test]
    fn one_vertex_system() {
        let vertices = vec![
            Vertex { id: "a".into(), self_int: -2, mark: None },
            Vertex { id: "c".into(), self_int: -3, mark: Some(Mark::C1) },
        ];
        let edges = vec![["a".to_string(), "c".to_string()]];
        let g = DualGraph::from_parts(vertices, &edges).unwrap();
        let sys = discrepancy_system(&g).unwrap();
        assert_eq!(sys.solution, vec![q("-1/4")]);
        assert_eq!(sys.discrepancies, vec![q("1/4")]);
    }

    #[test]
    fn discrepancy_requires_c1_and_minus_two_interior() {
        let g = chain(3, -2);
        assert!(matches!(
            discrepancy_system(&g),
            Err(Error::MissingBoundary)
        ));
        let vertices = vec![
            Vertex { id: "a".into(), self_int: -3, mark: None },
            Vertex { id: "c".into(), self_int: -3, mark: Some(Mark::C1) },
        ];
        let edges = vec![["a".to_string(), "c".to_string()]];
        let g = DualGraph::from_parts(vertices, &edges).unwrap();
        assert!(matches!(
            discrepancy_system(&g),
            Err(Error::InteriorNotMinusTwo { .. })
        ));
    }

    #[test]
    fn solver_reports_singularity() {
        let m = vec![
            vec![q("1"), q("2")],
            vec![q("2"), q("4")],
        ];
        assert!(solve_exact(m, vec![q("1"), q("2")]).is_none());
        let m = vec![
            vec![q("0"), q("1")],
            vec![q("1"), q("0")],
        ];
        // Zero pivot forces a row swap.
        let x = solve_exact(m, vec![q("3"), q("5")]).unwrap();
        assert_eq!(x, vec![q("5"), q("3")]);
    }
}
