use std::collections::HashMap;
use std::fmt;

use crate::OracleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Up,
    Down,
}

/// Unit triangle on the sheared lattice where `(i, j)` sits at `x = i + j/2`.
///
/// `Up(i, j)` has corners `(i,j), (i+1,j), (i,j+1)`; `Down(i, j)` has corners
/// `(i+1,j), (i,j+1), (i+1,j+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub i: i64,
    pub j: i64,
    pub kind: Kind,
}

impl Triangle {
    pub fn up(i: i64, j: i64) -> Self {
        Self { i, j, kind: Kind::Up }
    }

    pub fn down(i: i64, j: i64) -> Self {
        Self { i, j, kind: Kind::Down }
    }

    /// Bottom-up by row, then left to right.
    fn scan_key(&self) -> (i64, i64) {
        let col = 2 * self.i + if self.kind == Kind::Down { 1 } else { 0 };
        (self.j, col)
    }

    /// Neighbours that come later in scan order, i.e. the only partners
    /// available when this is the first uncovered triangle.
    fn forward_neighbours(&self) -> Vec<Triangle> {
        match self.kind {
            Kind::Up => vec![Triangle::down(self.i, self.j)],
            Kind::Down => vec![Triangle::up(self.i + 1, self.j), Triangle::up(self.i, self.j + 1)],
        }
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = if self.kind == Kind::Up { 'U' } else { 'D' };
        write!(f, "{k}({},{})", self.i, self.j)
    }
}

/// A finite set of unit triangles, stored in scan order.
#[derive(Clone, Debug)]
pub struct TriRegion {
    triangles: Vec<Triangle>,
    index: HashMap<Triangle, usize>,
    forward: Vec<Vec<usize>>,
    /// `(down, up)` triangle indices of the lozenges crossing the axis,
    /// slot 0 first.
    axis: Vec<(usize, usize)>,
}

impl TriRegion {
    pub fn from_triangles(mut triangles: Vec<Triangle>) -> Self {
        triangles.sort_by_key(Triangle::scan_key);
        triangles.dedup();
        let index: HashMap<Triangle, usize> = triangles.iter().enumerate().map(|(k, t)| (*t, k)).collect();
        let forward = triangles
            .iter()
            .map(|t| t.forward_neighbours().iter().filter_map(|n| index.get(n).copied()).collect())
            .collect();
        Self { triangles, index, forward, axis: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn index_of(&self, t: &Triangle) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub(crate) fn forward(&self, k: usize) -> &[usize] {
        &self.forward[k]
    }

    pub fn count_kind(&self, kind: Kind) -> usize {
        self.triangles.iter().filter(|t| t.kind == kind).count()
    }

    pub fn is_balanced(&self) -> bool {
        self.count_kind(Kind::Up) == self.count_kind(Kind::Down)
    }

    pub fn axis_slots(&self) -> &[(usize, usize)] {
        &self.axis
    }

    /// True if every triangle can reach every other through shared edges.
    pub fn is_connected(&self) -> bool {
        if self.triangles.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(k) = stack.pop() {
            let t = self.triangles[k];
            let all = match t.kind {
                Kind::Up => [Triangle::down(t.i, t.j), Triangle::down(t.i - 1, t.j), Triangle::down(t.i, t.j - 1)],
                Kind::Down => [Triangle::up(t.i, t.j), Triangle::up(t.i + 1, t.j), Triangle::up(t.i, t.j + 1)],
            };
            for n in all {
                if let Some(m) = self.index_of(&n) {
                    if !seen[m] {
                        seen[m] = true;
                        stack.push(m);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn lower_half(n: i64, m: i64) -> Vec<Triangle> {
    let mut out = Vec::new();
    for j in 0..n {
        out.extend((-j..m).map(|i| Triangle::up(i, j)));
        out.extend((-j - 1..m).map(|i| Triangle::down(i, j)));
    }
    out
}

/// Hexagon with side lengths `N, M, N, N, M, N`, the `M` sides horizontal.
///
/// The symmetry axis parallel to the `M` sides is the line `j = N`; the
/// lozenge `Down(l−N, N−1) ∪ Up(l−N, N)` is axis slot `l`.
pub fn build_hexagon_region(n: usize, m: usize) -> TriRegion {
    let (n, m) = (n as i64, m as i64);
    let mut tris = lower_half(n, m);
    for t in 0..n {
        let j = n + t;
        tris.extend((-n..m - t).map(|i| Triangle::up(i, j)));
        tris.extend((-n..m - t - 1).map(|i| Triangle::down(i, j)));
    }
    let mut r = TriRegion::from_triangles(tris);
    r.axis = (0..n + m)
        .map(|l| {
            let d = r.index_of(&Triangle::down(l - n, n - 1)).expect("axis down triangle");
            let u = r.index_of(&Triangle::up(l - n, n)).expect("axis up triangle");
            (d, u)
        })
        .collect();
    r
}

/// Lower half of the hexagon with the axis half-lozenges at `dents` removed.
pub fn build_dented_region(n: usize, m: usize, dents: &[usize]) -> Result<TriRegion, OracleError> {
    let ok = dents.len() == n && dents.windows(2).all(|w| w[0] < w[1]) && dents.iter().all(|&r| r < n + m);
    if !ok {
        return Err(OracleError::InvalidDents { n, m, dents: dents.to_vec() });
    }
    let (ni, mi) = (n as i64, m as i64);
    let removed: Vec<Triangle> = dents.iter().map(|&r| Triangle::down(r as i64 - ni, ni - 1)).collect();
    let tris = lower_half(ni, mi).into_iter().filter(|t| !removed.contains(t)).collect();
    Ok(TriRegion::from_triangles(tris))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_sizes() {
        let r = build_hexagon_region(1, 1);
        assert_eq!(r.len(), 6);
        assert_eq!(r.axis_slots().len(), 2);
        let r = build_hexagon_region(4, 3);
        assert_eq!(r.axis_slots().len(), 7);
        // 2·(NM + MN + N²) triangles
        assert_eq!(r.len(), 2 * (12 + 12 + 16));
        assert!(r.is_balanced() && r.is_connected());
    }

    #[test]
    fn dented_regions() {
        let r = build_dented_region(4, 3, &[0, 1, 4, 5]).unwrap();
        assert!(r.is_balanced());
        assert!(build_dented_region(2, 1, &[1, 1]).is_err());
        assert!(build_dented_region(2, 1, &[0, 3]).is_err());
    }

    #[test]
    fn scan_order_is_rows_then_columns() {
        let r = build_hexagon_region(1, 1);
        let keys: Vec<_> = r.triangles().iter().map(|t| t.to_string()).collect();
        assert_eq!(keys, ["D(-1,0)", "U(0,0)", "D(0,0)", "U(-1,1)", "D(-1,1)", "U(0,1)"]);
    }
}
