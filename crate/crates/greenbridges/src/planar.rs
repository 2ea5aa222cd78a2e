//! Combinatorial embeddings of plane graphs from vertex coordinates, and
//! face enumeration by walking the rotation system.
//!
//! A dart is a directed edge, encoded as `2 * edge + direction`. Walking
//! "next incident edge in counterclockwise order at the head" around every
//! dart exactly once yields the faces of the embedding; inner faces come out
//! traced clockwise (negative signed area) and the outer walk
//! counterclockwise (positive).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Habitat};

/// One (x, y) pair per vertex of the straight-line drawing.
#[derive(Debug, Clone, PartialEq)]
pub struct Coordinates {
    points: Vec<(f64, f64)>,
}

impl Coordinates {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        for (i, &(x, y)) in points.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::Input(format!("non-finite coordinate at vertex {i}")));
            }
        }
        Ok(Coordinates { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, v: usize) -> (f64, f64) {
        self.points[v]
    }

    pub fn as_slice(&self) -> &[(f64, f64)] {
        &self.points
    }
}

/// Rotation system: per vertex, the incident edge indices in counterclockwise
/// order by the angle towards the neighbor.
#[derive(Debug, Clone)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
    coords: Coordinates,
}

impl Embedding {
    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn coords(&self) -> &Coordinates {
        &self.coords
    }
}

/// A face of the embedding.
#[derive(Debug, Clone)]
pub struct Face {
    /// Cyclic vertex sequence of the boundary walk. Bridges make vertices
    /// repeat; such walks are not simple cycles.
    pub boundary: Vec<usize>,
    pub edge_indices: BTreeSet<usize>,
    pub is_outer: bool,
    signed_area: f64,
}

impl Face {
    pub fn boundary_len(&self) -> usize {
        self.boundary.len()
    }

    /// True when the boundary walk visits every vertex exactly once and has
    /// at least three vertices.
    pub fn is_simple_cycle(&self) -> bool {
        let distinct: BTreeSet<usize> = self.boundary.iter().copied().collect();
        self.boundary.len() >= 3 && distinct.len() == self.boundary.len()
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.boundary.iter().copied().collect()
    }

    pub fn signed_area(&self) -> f64 {
        self.signed_area
    }
}

/// Orders each vertex's incident edges counterclockwise by the polar angle of
/// the neighbor. The drawing is trusted to be crossing-free.
pub fn rotation_system_from_coordinates(g: &Graph, coords: &Coordinates) -> Result<Embedding> {
    if coords.len() != g.vertex_count() {
        return Err(Error::Input(format!(
            "expected {} coordinate pairs, got {}",
            g.vertex_count(),
            coords.len()
        )));
    }
    let adj = g.adjacency();
    let mut rotation = Vec::with_capacity(g.vertex_count());
    for (v, neighbours) in adj.iter().enumerate() {
        let (vx, vy) = coords.get(v);
        let mut incident: Vec<(f64, usize)> = Vec::with_capacity(neighbours.len());
        for &(w, e) in neighbours {
            let (wx, wy) = coords.get(w);
            if wx == vx && wy == vy {
                return Err(Error::DegenerateGeometry(format!(
                    "adjacent vertices {v} and {w} share coordinates ({vx}, {vy})"
                )));
            }
            incident.push(((wy - vy).atan2(wx - vx), e));
        }
        incident.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
        rotation.push(incident.into_iter().map(|(_, e)| e).collect());
    }
    Ok(Embedding {
        rotation,
        coords: coords.clone(),
    })
}

/// Walks every dart once and groups them into faces. Per connected component
/// the face with the largest signed area (the counterclockwise outer walk) is
/// flagged `is_outer`, ties broken by longer boundary, then lower index.
pub fn enumerate_faces(g: &Graph, emb: &Embedding) -> Result<Vec<Face>> {
    let adj = g.adjacency();
    for (v, neighbours) in adj.iter().enumerate() {
        let incident: BTreeSet<usize> = neighbours.iter().map(|&(_, e)| e).collect();
        let in_rotation: BTreeSet<usize> = emb.rotation[v].iter().copied().collect();
        if incident != in_rotation || emb.rotation[v].len() != neighbours.len() {
            return Err(Error::Embedding(format!(
                "rotation at vertex {v} does not list its incident edges exactly once"
            )));
        }
    }

    // Position of each edge within its endpoint's rotation.
    let pos_in_rotation =
        |v: usize, e: usize| -> usize { emb.rotation[v].iter().position(|&x| x == e).unwrap() };
    let dart_head = |d: usize| -> usize {
        let (a, b) = g.edges()[d / 2];
        if d.is_multiple_of(2) {
            b
        } else {
            a
        }
    };
    let dart_tail = |d: usize| -> usize {
        let (a, b) = g.edges()[d / 2];
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    };

    let dart_count = 2 * g.edge_count();
    let mut visited = vec![false; dart_count];
    let mut faces: Vec<Face> = Vec::new();

    for start in 0..dart_count {
        if visited[start] {
            continue;
        }
        let mut boundary = Vec::new();
        let mut edge_indices = BTreeSet::new();
        let mut area2 = 0.0f64;
        let mut d = start;
        loop {
            visited[d] = true;
            let tail = dart_tail(d);
            let head = dart_head(d);
            boundary.push(tail);
            edge_indices.insert(d / 2);
            let (tx, ty) = emb.coords.get(tail);
            let (hx, hy) = emb.coords.get(head);
            area2 += tx * hy - hx * ty;
            // Continue with the rotation successor of the reversed dart.
            let p = pos_in_rotation(head, d / 2);
            let next_edge = emb.rotation[head][(p + 1) % emb.rotation[head].len()];
            let (a, _) = g.edges()[next_edge];
            d = if a == head {
                2 * next_edge
            } else {
                2 * next_edge + 1
            };
            if d == start {
                break;
            }
        }
        faces.push(Face {
            boundary,
            edge_indices,
            is_outer: false,
            signed_area: area2 / 2.0,
        });
    }

    // Outer face selection per connected component.
    let comp = g.components();
    let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
    let mut outer: Vec<Option<usize>> = vec![None; ncomp];
    for (i, f) in faces.iter().enumerate() {
        let c = comp[f.boundary[0]];
        let better = match outer[c] {
            None => true,
            Some(j) => {
                let other = &faces[j];
                f.signed_area > other.signed_area
                    || (f.signed_area == other.signed_area
                        && f.boundary.len() > other.boundary.len())
            }
        };
        if better {
            outer[c] = Some(i);
        }
    }
    for idx in outer.into_iter().flatten() {
        faces[idx].is_outer = true;
    }
    Ok(faces)
}

/// True iff some non-outer face's boundary is a simple cycle whose vertex set
/// equals `h`.
pub fn is_face_habitat(faces: &[Face], h: &Habitat) -> bool {
    let target: BTreeSet<usize> = h.vertices().iter().copied().collect();
    faces
        .iter()
        .any(|f| !f.is_outer && f.is_simple_cycle() && f.vertex_set() == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify_habitat, HabitatClass};

    fn coords(pts: &[(f64, f64)]) -> Coordinates {
        Coordinates::new(pts.to_vec()).unwrap()
    }

    fn triangle() -> (Graph, Coordinates) {
        let g = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        (g, coords(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]))
    }

    #[test]
    fn rotation_orders_by_angle() {
        let (g, c) = triangle();
        let emb = rotation_system_from_coordinates(&g, &c).unwrap();
        for v in 0..3 {
            assert_eq!(emb.rotation()[v].len(), 2);
        }

        // Star K_{1,3}: center rotation has all three edges sorted by angle.
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = coords(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0)]);
        let emb = rotation_system_from_coordinates(&star, &c).unwrap();
        assert_eq!(emb.rotation()[0], vec![0, 1, 2]);
    }

    #[test]
    fn coincident_adjacent_coordinates_are_rejected() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let c = coords(&[(0.5, 0.5), (0.5, 0.5)]);
        assert!(matches!(
            rotation_system_from_coordinates(&g, &c),
            Err(Error::DegenerateGeometry(_))
        ));
    }

    #[test]
    fn face_counts_match_euler() {
        let (g, c) = triangle();
        let emb = rotation_system_from_coordinates(&g, &c).unwrap();
        assert_eq!(enumerate_faces(&g, &emb).unwrap().len(), 2);

        let square = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let c = coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let emb = rotation_system_from_coordinates(&square, &c).unwrap();
        assert_eq!(enumerate_faces(&square, &emb).unwrap().len(), 2);

        // Two triangles sharing an edge: 5 - 4 + 2 = 3 faces.
        let g = Graph::new(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let c = coords(&[(0.0, 0.0), (1.0, 0.0), (0.5, 1.0), (0.5, -1.0)]);
        let emb = rotation_system_from_coordinates(&g, &c).unwrap();
        let faces = enumerate_faces(&g, &emb).unwrap();
        assert_eq!(faces.len(), 3);
        assert_eq!(faces.iter().filter(|f| f.is_outer).count(), 1);
    }

    #[test]
    fn boundary_lengths_sum_to_twice_edge_count() {
        let g = Graph::new(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let c = coords(&[(0.0, 0.0), (1.0, 0.0), (0.5, 1.0), (0.5, -1.0)]);
        let emb = rotation_system_from_coordinates(&g, &c).unwrap();
        let faces = enumerate_faces(&g, &emb).unwrap();
        let total: usize = faces.iter().map(|f| f.boundary_len()).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn bridges_double_back_on_one_face() {
        // Path on 3 vertices: both edges are bridges, single face of length 4.
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let c = coords(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        let emb = rotation_system_from_coordinates(&g, &c).unwrap();
        let faces = enumerate_faces(&g, &emb).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].boundary_len(), 4);
        assert!(!faces[0].is_simple_cycle());
        assert!(faces[0].is_outer);
    }

    #[test]
    fn face_habitat_detection() {
        let g = Graph::new(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let c = coords(&[(0.0, 0.0), (1.0, 0.0), (0.5, 1.0), (0.5, -1.0)]);
        let emb = rotation_system_from_coordinates(&g, &c).unwrap();
        let faces = enumerate_faces(&g, &emb).unwrap();

        let inner = Habitat::new([0, 1, 2], &g).unwrap();
        assert!(is_face_habitat(&faces, &inner));
        let other_inner = Habitat::new([0, 1, 3], &g).unwrap();
        assert!(is_face_habitat(&faces, &other_inner));
        // All four vertices span the outer walk, not a single inner face.
        let all = Habitat::new([0, 1, 2, 3], &g).unwrap();
        assert!(!is_face_habitat(&faces, &all));
    }

    #[test]
    fn simple_inner_faces_classify_as_cycles() {
        let g = Graph::new(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let c = coords(&[(0.0, 0.0), (1.0, 0.0), (0.5, 1.0), (0.5, -1.0)]);
        let emb = rotation_system_from_coordinates(&g, &c).unwrap();
        for f in enumerate_faces(&g, &emb).unwrap() {
            if !f.is_outer && f.is_simple_cycle() {
                let h = Habitat::new(f.vertex_set(), &g).unwrap();
                assert_eq!(classify_habitat(&g, &h), HabitatClass::Cycle);
            }
        }
    }

    #[test]
    fn multi_component_euler() {
        // Triangle plus a far-away square: each component contributes its own
        // outer walk, so the walk count is E - V + 2 * components.
        let g = Graph::new(
            7,
            vec![(0, 1), (0, 2), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)],
        )
        .unwrap();
        let c = coords(&[
            (0.0, 0.0),
            (1.0, 0.0),
            (0.0, 1.0),
            (10.0, 0.0),
            (11.0, 0.0),
            (11.0, 1.0),
            (10.0, 1.0),
        ]);
        let emb = rotation_system_from_coordinates(&g, &c).unwrap();
        let faces = enumerate_faces(&g, &emb).unwrap();
        assert_eq!(faces.len(), (2 * 2));
        assert_eq!(faces.iter().filter(|f| f.is_outer).count(), 2);
    }
}
