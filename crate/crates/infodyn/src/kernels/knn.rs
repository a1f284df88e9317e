//! Chebyshev-metric (max-norm) nearest-neighbour search.
//!
//! This is the hot kernel behind the KSG estimator: for every sample we need
//! the distance to its K-th nearest neighbour in the joint space and strict
//! range counts in the marginal spaces. Three backends sit behind one
//! interface:
//!
//! - a kd-tree with per-node bounding boxes (the general case),
//! - a sorted array for one-dimensional marginals,
//! - a brute-force scan below `BRUTE_MAX_N` points (tree overhead dominates)
//!   and above `KDTREE_MAX_D` dimensions (pruning stops working).
//!
//! Neighbour-distance ties are broken towards the lower point index; the
//! tie-break never changes the K-th distance value or a range count, it only
//! fixes which point is "the" K-th neighbour, so all query results are
//! deterministic.

use crate::error::{Error, Result};
use crate::kernels::Matrix;

const BRUTE_MAX_N: usize = 64;
const KDTREE_MAX_D: usize = 16;
const LEAF_SIZE: usize = 16;

/// A finite set of points in `d` dimensions.
#[derive(Debug, Clone)]
pub struct PointCloud {
    points: Matrix,
}

impl PointCloud {
    /// Wrap a sample matrix; every entry must be finite.
    pub fn new(points: Matrix) -> Result<Self> {
        if points.rows() == 0 {
            return Err(Error::InsufficientLength("empty point cloud".into()));
        }
        if points.as_slice().iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParam("non-finite point coordinate".into()));
        }
        Ok(PointCloud { points })
    }

    pub fn len(&self) -> usize {
        self.points.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.points.rows() == 0
    }

    pub fn dims(&self) -> usize {
        self.points.cols()
    }

    #[inline]
    pub fn point(&self, i: usize) -> &[f64] {
        self.points.row(i)
    }
}

#[inline]
fn chebyshev(a: &[f64], b: &[f64]) -> f64 {
    let mut m = 0.0f64;
    for (x, y) in a.iter().zip(b) {
        let d = (x - y).abs();
        if d > m {
            m = d;
        }
    }
    m
}

/// Chebyshev distance with early abort once `bound` is exceeded.
#[inline]
fn chebyshev_bounded(a: &[f64], b: &[f64], bound: f64) -> f64 {
    let mut m = 0.0f64;
    for (x, y) in a.iter().zip(b) {
        let d = (x - y).abs();
        if d > m {
            if d >= bound {
                return d;
            }
            m = d;
        }
    }
    m
}

struct KdNode {
    start: u32,
    end: u32,
    // child node ids; leaf when left == u32::MAX
    left: u32,
    right: u32,
}

struct KdTree {
    dims: usize,
    nodes: Vec<KdNode>,
    bbox: Vec<f64>, // per node: d lows then d highs
    pts: Vec<f64>,  // points permuted into leaf order, row-major
}

enum Backend {
    Brute,
    Sorted1d { sorted: Vec<f64> },
    Tree(KdTree),
}

/// Read-only spatial index over a point cloud; concurrent queries are safe.
pub struct SpatialIndex {
    cloud: PointCloud,
    backend: Backend,
}

impl SpatialIndex {
    pub fn build(cloud: PointCloud) -> Self {
        let n = cloud.len();
        let d = cloud.dims();
        let backend = if d == 1 {
            let mut sorted: Vec<f64> = (0..n).map(|i| cloud.point(i)[0]).collect();
            sorted.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
            Backend::Sorted1d { sorted }
        } else if n < BRUTE_MAX_N || d > KDTREE_MAX_D {
            Backend::Brute
        } else {
            Backend::Tree(KdTree::build(&cloud))
        };
        SpatialIndex { cloud, backend }
    }

    pub fn cloud(&self) -> &PointCloud {
        &self.cloud
    }

    /// Distance from point `query` to its `k`-th nearest neighbour under the
    /// max-norm, the query point itself excluded.
    pub fn kth_distance(&self, query: usize, k: usize) -> Result<f64> {
        let n = self.cloud.len();
        if k >= n {
            return Err(Error::InvalidParam(format!(
                "k = {k} needs at least {} points, cloud has {n}",
                k + 1
            )));
        }
        // The (k+1)-th smallest distance over all points including the query
        // itself (distance 0) equals the k-th distance with the query
        // excluded, which sidesteps identity checks in the inner loop.
        let needed = k + 1;
        let q = self.cloud.point(query);
        let eps = match &self.backend {
            Backend::Brute => {
                let mut best = TopK::new(needed);
                for i in 0..n {
                    best.offer(chebyshev_bounded(q, self.cloud.point(i), best.bound()));
                }
                best.worst()
            }
            Backend::Sorted1d { sorted } => kth_distance_1d(sorted, q[0], needed),
            Backend::Tree(tree) => {
                let mut best = TopK::new(needed);
                tree.knn(q, &mut best);
                best.worst()
            }
        };
        Ok(eps)
    }

    /// Number of points within `eps` of `query` (strict `<` or non-strict
    /// `<=`), the query point itself excluded.
    pub fn count_within(&self, query: usize, eps: f64, strict: bool) -> usize {
        let q = self.cloud.point(query);
        let total = match &self.backend {
            Backend::Brute => {
                let mut c = 0usize;
                for i in 0..self.cloud.len() {
                    let d = chebyshev(q, self.cloud.point(i));
                    if (strict && d < eps) || (!strict && d <= eps) {
                        c += 1;
                    }
                }
                c
            }
            Backend::Sorted1d { sorted } => {
                // Compare distances, not reconstructed interval endpoints:
                // v + eps rounds differently from the subtraction that
                // produced eps, which would flip boundary points.
                let v = q[0];
                let split = sorted.partition_point(|&x| x < v);
                let in_left = |x: f64| {
                    let d = v - x;
                    if strict {
                        d < eps
                    } else {
                        d <= eps
                    }
                };
                let in_right = |x: f64| {
                    let d = x - v;
                    if strict {
                        d < eps
                    } else {
                        d <= eps
                    }
                };
                // left part: distance decreasing in index
                let lo = sorted[..split].partition_point(|&x| !in_left(x));
                // right part: distance increasing in index
                let hi = split + sorted[split..].partition_point(|&x| in_right(x));
                hi - lo
            }
            Backend::Tree(tree) => tree.count(q, eps, strict),
        };
        let self_counted = if strict { 0.0 < eps } else { 0.0 <= eps };
        total - usize::from(self_counted)
    }
}

/// Fixed-size ascending buffer of the smallest distances seen so far.
struct TopK {
    buf: Vec<f64>,
    cap: usize,
}

impl TopK {
    fn new(cap: usize) -> Self {
        TopK { buf: Vec::with_capacity(cap), cap }
    }

    #[inline]
    fn bound(&self) -> f64 {
        if self.buf.len() == self.cap {
            self.buf[self.cap - 1]
        } else {
            f64::INFINITY
        }
    }

    #[inline]
    fn offer(&mut self, d: f64) {
        if self.buf.len() == self.cap {
            if d >= self.buf[self.cap - 1] {
                return;
            }
            self.buf.pop();
        }
        let pos = self.buf.partition_point(|&x| x <= d);
        self.buf.insert(pos, d);
    }

    fn worst(&self) -> f64 {
        *self.buf.last().expect("k+1 <= n guarantees a full buffer")
    }
}

fn kth_distance_1d(sorted: &[f64], v: f64, needed: usize) -> f64 {
    // Expand outward from the insertion position, always taking the nearer
    // side; after `needed` picks the largest picked distance is the answer.
    let start = sorted.partition_point(|&x| x < v);
    let mut left = start; // next candidate on the left is left-1
    let mut right = start; // next candidate on the right is right
    let mut worst = 0.0f64;
    for _ in 0..needed {
        let dl = if left > 0 { v - sorted[left - 1] } else { f64::INFINITY };
        let dr = if right < sorted.len() { sorted[right] - v } else { f64::INFINITY };
        if dl <= dr {
            worst = dl;
            left -= 1;
        } else {
            worst = dr;
            right += 1;
        }
    }
    worst
}

impl KdTree {
    fn build(cloud: &PointCloud) -> Self {
        let n = cloud.len();
        let d = cloud.dims();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut nodes = Vec::with_capacity(2 * n / LEAF_SIZE + 2);
        let mut bbox = Vec::with_capacity((2 * n / LEAF_SIZE + 2) * 2 * d);
        build_node(cloud, &mut perm, 0, n, &mut nodes, &mut bbox, d);
        // permute point rows into leaf order for contiguous leaf scans
        let mut pts = Vec::with_capacity(n * d);
        for &ix in &perm {
            pts.extend_from_slice(cloud.point(ix as usize));
        }
        KdTree { dims: d, nodes, bbox, pts }
    }

    #[inline]
    fn point(&self, pos: usize) -> &[f64] {
        &self.pts[pos * self.dims..(pos + 1) * self.dims]
    }

    /// Lower bound on the distance from `q` to any point in node `id`.
    #[inline]
    fn min_dist(&self, id: usize, q: &[f64]) -> f64 {
        let d = self.dims;
        let lo = &self.bbox[id * 2 * d..id * 2 * d + d];
        let hi = &self.bbox[id * 2 * d + d..(id + 1) * 2 * d];
        let mut m = 0.0f64;
        for j in 0..d {
            let v = q[j];
            let gap = if v < lo[j] {
                lo[j] - v
            } else if v > hi[j] {
                v - hi[j]
            } else {
                0.0
            };
            if gap > m {
                m = gap;
            }
        }
        m
    }

    /// Upper bound on the distance from `q` to any point in node `id`.
    #[inline]
    fn max_dist(&self, id: usize, q: &[f64]) -> f64 {
        let d = self.dims;
        let lo = &self.bbox[id * 2 * d..id * 2 * d + d];
        let hi = &self.bbox[id * 2 * d + d..(id + 1) * 2 * d];
        let mut m = 0.0f64;
        for j in 0..d {
            let v = q[j];
            let far = (v - lo[j]).abs().max((hi[j] - v).abs());
            if far > m {
                m = far;
            }
        }
        m
    }

    fn knn(&self, q: &[f64], best: &mut TopK) {
        self.knn_node(0, q, best);
    }

    fn knn_node(&self, id: usize, q: &[f64], best: &mut TopK) {
        let node = &self.nodes[id];
        if node.left == u32::MAX {
            for pos in node.start as usize..node.end as usize {
                best.offer(chebyshev_bounded(q, self.point(pos), best.bound()));
            }
            return;
        }
        let (l, r) = (node.left as usize, node.right as usize);
        let dl = self.min_dist(l, q);
        let dr = self.min_dist(r, q);
        let order = if dl <= dr { [(l, dl), (r, dr)] } else { [(r, dr), (l, dl)] };
        for (child, dist) in order {
            if dist < best.bound() || best.buf.len() < best.cap {
                self.knn_node(child, q, best);
            }
        }
    }

    fn count(&self, q: &[f64], eps: f64, strict: bool) -> usize {
        self.count_node(0, q, eps, strict)
    }

    fn count_node(&self, id: usize, q: &[f64], eps: f64, strict: bool) -> usize {
        let node = &self.nodes[id];
        let dmin = self.min_dist(id, q);
        if (strict && dmin >= eps) || (!strict && dmin > eps) {
            return 0;
        }
        let dmax = self.max_dist(id, q);
        if (strict && dmax < eps) || (!strict && dmax <= eps) {
            return (node.end - node.start) as usize;
        }
        if node.left == u32::MAX {
            let mut c = 0usize;
            for pos in node.start as usize..node.end as usize {
                let d = chebyshev_bounded(q, self.point(pos), eps + 1.0);
                if (strict && d < eps) || (!strict && d <= eps) {
                    c += 1;
                }
            }
            return c;
        }
        self.count_node(node.left as usize, q, eps, strict)
            + self.count_node(node.right as usize, q, eps, strict)
    }
}

fn build_node(
    cloud: &PointCloud,
    perm: &mut [u32],
    start: usize,
    end: usize,
    nodes: &mut Vec<KdNode>,
    bbox: &mut Vec<f64>,
    dims: usize,
) -> u32 {
    let id = nodes.len();
    nodes.push(KdNode { start: start as u32, end: end as u32, left: u32::MAX, right: u32::MAX });
    let mut lo = vec![f64::INFINITY; dims];
    let mut hi = vec![f64::NEG_INFINITY; dims];
    for &ix in &perm[start..end] {
        let p = cloud.point(ix as usize);
        for j in 0..dims {
            lo[j] = lo[j].min(p[j]);
            hi[j] = hi[j].max(p[j]);
        }
    }
    bbox.extend_from_slice(&lo);
    bbox.extend_from_slice(&hi);
    let count = end - start;
    if count > LEAF_SIZE {
        // split the widest dimension at its median
        let mut split_dim = 0;
        let mut widest = -1.0;
        for j in 0..dims {
            let w = hi[j] - lo[j];
            if w > widest {
                widest = w;
                split_dim = j;
            }
        }
        if widest > 0.0 {
            let mid = count / 2;
            perm[start..end].select_nth_unstable_by(mid, |&a, &b| {
                let va = cloud.point(a as usize)[split_dim];
                let vb = cloud.point(b as usize)[split_dim];
                va.partial_cmp(&vb).unwrap().then(a.cmp(&b))
            });
            let left = build_node(cloud, perm, start, start + mid, nodes, bbox, dims);
            let right = build_node(cloud, perm, start + mid, end, nodes, bbox, dims);
            nodes[id].left = left;
            nodes[id].right = right;
        }
        // widest == 0 means all points identical: keep as a fat leaf
    }
    id as u32
}

/// Distance from point `query_index` to its `k`-th nearest neighbour in the
/// cloud under the max-norm, excluding the point itself.
pub fn knn_radius(cloud: &PointCloud, query_index: usize, k: usize) -> Result<f64> {
    if query_index >= cloud.len() {
        return Err(Error::InvalidParam("query index out of bounds".into()));
    }
    let needed = k + 1;
    if needed > cloud.len() {
        return Err(Error::InvalidParam(format!(
            "k = {k} needs at least {} points, cloud has {}",
            k + 1,
            cloud.len()
        )));
    }
    let q = cloud.point(query_index);
    let mut best = TopK::new(needed);
    for i in 0..cloud.len() {
        best.offer(chebyshev_bounded(q, cloud.point(i), best.bound()));
    }
    Ok(best.worst())
}

/// Number of other points strictly within (`strict`) or within (`!strict`)
/// `eps` of point `query_index` under the max-norm.
pub fn count_within(cloud: &PointCloud, query_index: usize, eps: f64, strict: bool) -> usize {
    let q = cloud.point(query_index);
    let mut c = 0usize;
    for i in 0..cloud.len() {
        if i == query_index {
            continue;
        }
        let d = chebyshev(q, cloud.point(i));
        if (strict && d < eps) || (!strict && d <= eps) {
            c += 1;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{sample_standard, RngHandle, StandardDist};

    fn cloud_from(rows: Vec<Vec<f64>>) -> PointCloud {
        let d = rows[0].len();
        let n = rows.len();
        let flat: Vec<f64> = rows.into_iter().flatten().collect();
        PointCloud::new(Matrix::from_flat(flat, n, d).unwrap()).unwrap()
    }

    fn random_cloud(n: usize, d: usize, stream: u64) -> PointCloud {
        let vals = sample_standard(&RngHandle::new(99, stream), StandardDist::Normal, n * d);
        PointCloud::new(Matrix::from_flat(vals, n, d).unwrap()).unwrap()
    }

    #[test]
    fn one_dim_examples() {
        let c = cloud_from(vec![vec![0.0], vec![1.0], vec![3.0], vec![7.0]]);
        assert_eq!(knn_radius(&c, 0, 1).unwrap(), 1.0);
        let c2 = cloud_from(vec![vec![0.0, 0.0], vec![1.0, 0.5], vec![2.0, 2.0]]);
        assert_eq!(knn_radius(&c2, 0, 1).unwrap(), 1.0); // max(1, 0.5)
    }

    #[test]
    fn count_examples() {
        let c = cloud_from(vec![vec![0.0], vec![1.0], vec![2.0]]);
        assert_eq!(count_within(&c, 1, 1.5, true), 2);
        assert_eq!(count_within(&c, 1, 0.5, true), 0); // below min gap
        assert_eq!(count_within(&c, 1, 1.0, true), 0); // strict excludes the boundary
        assert_eq!(count_within(&c, 1, 1.0, false), 2);
    }

    #[test]
    fn index_matches_brute_force_on_random_clouds() {
        // the k-NN engine must agree with an exhaustive scan
        let mut checked = 0usize;
        for d in 1..=6usize {
            for rep in 0..6u64 {
                let n = 80 + 37 * rep as usize;
                let cloud = random_cloud(n, d, (d as u64) * 100 + rep);
                let index = SpatialIndex::build(cloud.clone());
                for q in (0..n).step_by(7) {
                    for k in [1usize, 3, 4] {
                        let fast = index.kth_distance(q, k).unwrap();
                        let slow = knn_radius(&cloud, q, k).unwrap();
                        assert!(
                            (fast - slow).abs() < 1e-12,
                            "kth mismatch d={d} rep={rep} q={q} k={k}"
                        );
                        for strict in [true, false] {
                            let cf = index.count_within(q, fast, strict);
                            let cs = count_within(&cloud, q, fast, strict);
                            assert_eq!(cf, cs, "count mismatch d={d} q={q} strict={strict}");
                        }
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 500);
    }

    #[test]
    fn brute_threshold_consistency() {
        // just below and above the brute-force cutoff give identical answers
        for n in [BRUTE_MAX_N - 1, BRUTE_MAX_N + 1] {
            let cloud = random_cloud(n, 3, n as u64);
            let index = SpatialIndex::build(cloud.clone());
            for q in 0..n {
                let a = index.kth_distance(q, 4).unwrap();
                let b = knn_radius(&cloud, q, 4).unwrap();
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn k_out_of_range_errors() {
        let c = cloud_from(vec![vec![0.0], vec![1.0]]);
        assert!(knn_radius(&c, 0, 2).is_err());
        assert!(SpatialIndex::build(c).kth_distance(0, 2).is_err());
    }

    #[test]
    fn duplicate_points_give_zero_radius() {
        let c = cloud_from(vec![vec![1.0, 1.0], vec![1.0, 1.0], vec![2.0, 2.0]]);
        assert_eq!(knn_radius(&c, 0, 1).unwrap(), 0.0);
        // strict count at eps=0 is zero, self not subtracted twice
        let idx = SpatialIndex::build(c);
        assert_eq!(idx.count_within(0, 0.0, true), 0);
    }
}
