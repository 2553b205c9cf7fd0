//! Equivelar quad surfaces `M(4,q)`: mirror complexes of `q`-gons.
//!
//! The facets of `M(4,q)` are the sign vectors with exactly two zeros at
//! cyclically adjacent positions. The surface has `2^q` vertices, each of
//! degree `q`, and sits in the 2-skeleton of the `q`-cube.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::bbc::{bbc_from_cyclic, build_direct};
use crate::combinatorics::bits;
use crate::cubical::{mirror_complex, CubicalComplex};
use crate::error::{Error, Result};
use crate::face::SignVector;
use crate::simplicial::gale_facets_cyclic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurface {
    complex: CubicalComplex,
    q: usize,
}

/// `M(4,q)` as the mirror complex of the boundary of the `q`-gon.
pub fn equivelar_m4q(q: usize) -> Result<QuadSurface> {
    if q < 3 {
        return Err(Error::InvalidParameters(format!("q-gon needs q >= 3 (got {q})")));
    }
    let polygon = gale_facets_cyclic(2, q)?;
    Ok(QuadSurface {
        complex: mirror_complex(&polygon)?,
        q,
    })
}

/// `g(q) = 1 + 2^(q-3) (q - 4)`.
pub fn genus_closed_form(q: usize) -> Result<i128> {
    if !(3..=64).contains(&q) {
        return Err(Error::InvalidParameters(format!(
            "genus formula needs 3 <= q <= 64 (got {q})"
        )));
    }
    Ok(1 + (1i128 << (q - 3)) * (q as i128 - 4))
}

/// Genus of a closed orientable surface from its Euler characteristic.
pub fn genus_from_euler(euler: i64) -> i128 {
    (2 - i128::from(euler)) / 2
}

impl QuadSurface {
    pub fn complex(&self) -> &CubicalComplex {
        &self.complex
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.complex.f_vector().euler_characteristic()
    }

    /// Genus by the closed form, checked against `(2 - χ) / 2`.
    pub fn genus(&self) -> Result<i128> {
        let closed_form = genus_closed_form(self.q)?;
        let from_euler = genus_from_euler(self.euler_characteristic());
        if closed_form != from_euler {
            return Err(Error::GenusMismatch {
                closed_form,
                from_euler,
            });
        }
        Ok(closed_form)
    }

    pub fn to_mesh(&self) -> QuadMesh {
        QuadMesh::from_cubical(&self.complex).expect("M(4,q) is two-dimensional")
    }

    pub fn is_orientable(&self) -> Result<bool> {
        self.to_mesh().is_orientable()
    }

    /// Every vertex link is a single cycle of length `q`.
    pub fn is_equivelar(&self) -> bool {
        let mesh = self.to_mesh();
        mesh.vertex_cycles()
            .is_ok_and(|cycles| cycles.iter().all(|&len| len == self.q))
    }
}

/// A quad mesh given by vertex indices in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadMesh {
    pub vertices: Vec<SignVector>,
    pub faces: Vec<[usize; 4]>,
}

impl QuadMesh {
    /// Quads of a pure 2-dimensional cubical complex, with vertices numbered
    /// in sorted sign-vector order.
    pub fn from_cubical(c: &CubicalComplex) -> Result<Self> {
        if c.pure_dim() != Some(2) {
            return Err(Error::NotASurface("facets are not all quadrilaterals".into()));
        }
        let mut vertices: Vec<SignVector> = c.faces_of_dim(0).into_iter().collect();
        vertices.sort_unstable();
        let index: HashMap<SignVector, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let n = c.ambient_dim();
        let faces = c
            .facets()
            .iter()
            .map(|f| {
                let mut z = bits(f.zero_mask());
                let (a, b) = (1u64 << z.next().unwrap(), 1u64 << z.next().unwrap());
                let support = f.support() | a | b;
                // (-,-), (+,-), (+,+), (-,+) around the square
                [a | b, b, 0, a].map(|neg| index[&SignVector::from_masks_unchecked(n, support, f.sign_mask() | neg)])
            })
            .collect();
        Ok(Self { vertices, faces })
    }

    pub fn from_faces(n_vertices: usize, faces: Vec<[usize; 4]>) -> Self {
        // vertex coordinates are irrelevant for abstract meshes
        let placeholder = SignVector::cube(1).expect("valid");
        Self {
            vertices: vec![placeholder; n_vertices],
            faces,
        }
    }

    fn edge_faces(&self) -> HashMap<(usize, usize), Vec<usize>> {
        let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            for k in 0..4 {
                let (u, v) = (f[k], f[(k + 1) % 4]);
                map.entry((u.min(v), u.max(v))).or_default().push(i);
            }
        }
        map
    }

    /// Length of the link cycle at every vertex, or an error if some edge is
    /// not in exactly two quads or some vertex link is not a single cycle.
    pub fn vertex_cycles(&self) -> Result<Vec<usize>> {
        for (e, fs) in self.edge_faces() {
            if fs.len() != 2 {
                return Err(Error::NotASurface(format!("edge {e:?} lies in {} quads", fs.len())));
            }
        }
        // link of v: one link edge (prev, next) per incident quad
        let mut link: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertices.len()];
        for f in &self.faces {
            for k in 0..4 {
                link[f[k]].push((f[(k + 3) % 4], f[(k + 1) % 4]));
            }
        }
        let mut out = Vec::with_capacity(link.len());
        for (v, edges) in link.iter().enumerate() {
            if edges.is_empty() {
                return Err(Error::NotASurface(format!("vertex {v} lies in no quad")));
            }
            let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
            for &(a, b) in edges {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
            if adj.values().any(|n| n.len() != 2) {
                return Err(Error::NotASurface(format!("link of vertex {v} is not a cycle")));
            }
            let start = edges[0].0;
            let (mut prev, mut cur, mut len) = (start, adj[&start][0], 1);
            while cur != start {
                let next = if adj[&cur][0] == prev {
                    adj[&cur][1]
                } else {
                    adj[&cur][0]
                };
                prev = cur;
                cur = next;
                len += 1;
            }
            if len != adj.len() {
                return Err(Error::NotASurface(format!("link of vertex {v} is disconnected")));
            }
            out.push(len);
        }
        Ok(out)
    }

    /// Whether the quads can be oriented so that every shared edge is
    /// traversed in opposite directions by its two quads.
    pub fn is_orientable(&self) -> Result<bool> {
        self.vertex_cycles()?;
        let edges = self.edge_faces();
        let direction = |f: usize, u: usize, v: usize| -> i8 {
            let q = &self.faces[f];
            let k = q.iter().position(|&x| x == u).expect("edge endpoint in quad");
            if q[(k + 1) % 4] == v {
                1
            } else {
                -1
            }
        };
        let mut orient: Vec<i8> = vec![0; self.faces.len()];
        for seed in 0..self.faces.len() {
            if orient[seed] != 0 {
                continue;
            }
            orient[seed] = 1;
            let mut queue = VecDeque::from([seed]);
            while let Some(f) = queue.pop_front() {
                let q = self.faces[f];
                for k in 0..4 {
                    let (u, v) = (q[k], q[(k + 1) % 4]);
                    let key = (u.min(v), u.max(v));
                    for &g in &edges[&key] {
                        if g == f {
                            continue;
                        }
                        let want = -orient[f] * direction(f, u, v) * direction(g, u, v);
                        if orient[g] == 0 {
                            orient[g] = want;
                            queue.push_back(g);
                        } else if orient[g] != want {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// `nOFF` text: dimension line, counts, one coordinate line per vertex,
    /// one `4 a b c d` line per quad.
    pub fn to_off(&self) -> String {
        let dim = self.vertices.first().map_or(0, SignVector::ambient_dim);
        let n_edges = self.edge_faces().len();
        let mut out = String::new();
        writeln!(out, "nOFF").unwrap();
        writeln!(out, "{dim}").unwrap();
        writeln!(out, "{} {} {}", self.vertices.len(), self.faces.len(), n_edges).unwrap();
        for v in &self.vertices {
            let coords: Vec<String> = v.entries().iter().map(|e| e.to_string()).collect();
            writeln!(out, "{}", coords.join(" ")).unwrap();
        }
        for f in &self.faces {
            writeln!(out, "4 {} {} {} {}", f[0], f[1], f[2], f[3]).unwrap();
        }
        out
    }
}

/// The neighborly cubical 3-sphere `S_3(q)` built from the pulling
/// triangulations of the `i`-gons, `i = 3, ..., q-1`.
pub fn neighborly_three_sphere(q: usize) -> Result<CubicalComplex> {
    build_direct(&bbc_from_cyclic(3, q)?)
}

/// Whether every quad of `s` is a face of `S_3(q)`.
pub fn embeds_in_sphere(s: &QuadSurface, q: usize) -> Result<bool> {
    let sphere = neighborly_three_sphere(q)?;
    if sphere.ambient_dim() != s.complex().ambient_dim() {
        return Ok(false);
    }
    let squares = sphere.faces_of_dim(2);
    Ok(s.complex().facets().iter().all(|f| squares.contains(f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_surfaces() {
        let m5 = equivelar_m4q(5).unwrap();
        assert_eq!(m5.complex().f_vector().counts(), &[32, 80, 40]);
        assert_eq!(m5.genus().unwrap(), 5);
        assert!(m5.is_orientable().unwrap());
        assert!(m5.is_equivelar());

        let torus = equivelar_m4q(4).unwrap();
        assert_eq!(torus.euler_characteristic(), 0);
        assert_eq!(torus.genus().unwrap(), 1);

        let cube = equivelar_m4q(3).unwrap();
        assert_eq!(cube.complex(), &CubicalComplex::cube_boundary(3).unwrap());
        assert_eq!(cube.genus().unwrap(), 0);
        assert!(equivelar_m4q(2).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(genus_closed_form(12).unwrap(), 4097);
        assert_eq!(genus_closed_form(5).unwrap(), 5);
        assert_eq!(genus_closed_form(4).unwrap(), 1);
        assert_eq!(genus_closed_form(3).unwrap(), 0);
    }

    #[test]
    fn embedding_and_negative_control() {
        let m5 = equivelar_m4q(5).unwrap();
        assert!(embeds_in_sphere(&m5, 5).unwrap());
        assert!(embeds_in_sphere(&equivelar_m4q(6).unwrap(), 6).unwrap());
        let stray: SignVector = "0+0++".parse().unwrap();
        assert!(!m5.complex().contains_face(&stray));
        assert!(CubicalComplex::cube_boundary(5).unwrap().contains_face(&stray));
    }

    #[test]
    fn off_export_shape() {
        let off = equivelar_m4q(4).unwrap().to_mesh().to_off();
        let lines: Vec<&str> = off.lines().collect();
        assert_eq!(lines[0], "nOFF");
        assert_eq!(lines[1], "4");
        assert_eq!(lines[2], "16 16 32");
        assert_eq!(lines.len(), 3 + 16 + 16);
        assert!(lines[3].split(' ').all(|c| c == "1" || c == "-1"));
        assert!(lines.last().unwrap().starts_with("4 "));
    }
}
