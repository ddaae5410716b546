//! Explicit symmetric association schemes on small vertex sets.
//!
//! A scheme is stored as one `n × n` matrix of class indices: entry `(x, y)`
//! names the unique class containing the pair. Index 0 is the identity.

use std::fmt::Write as _;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::spectrum::{SchemeSpectrum, Sign};

/// Largest vertex count accepted for dense eigendecompositions.
pub const DENSE_VERTEX_CAP: usize = 4096;

/// Integrality tolerance when rounding numerically computed eigenvalues.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitScheme {
    vertex_count: usize,
    class_count: usize,
    index: Vec<u16>,
}

impl ExplicitScheme {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `d`: the number of non-identity classes.
    pub fn d(&self) -> usize {
        self.class_count - 1
    }

    pub fn class_of(&self, x: usize, y: usize) -> usize {
        self.index[x * self.vertex_count + y] as usize
    }

    /// Row sums of each class.
    pub fn valencies(&self) -> Vec<usize> {
        let mut v = vec![0; self.class_count];
        for y in 0..self.vertex_count {
            v[self.class_of(0, y)] += 1;
        }
        v
    }

    pub fn class_matrix(&self, i: usize) -> Vec<Vec<u8>> {
        let n = self.vertex_count;
        (0..n)
            .map(|x| (0..n).map(|y| u8::from(self.class_of(x, y) == i)).collect())
            .collect()
    }

    /// `Σ w_i A_{c_i}` as a dense float matrix.
    pub fn adjacency(&self, classes: &[usize], weights: &[f64]) -> DMatrix<f64> {
        let n = self.vertex_count;
        let mut w = vec![0.0; self.class_count];
        for (&c, &x) in classes.iter().zip(weights) {
            w[c] += x;
        }
        DMatrix::from_fn(n, n, |x, y| w[self.class_of(x, y)])
    }

    /// Build without validation. Only for constructions known to be schemes.
    fn from_index(vertex_count: usize, class_count: usize, index: Vec<u16>) -> Self {
        ExplicitScheme {
            vertex_count,
            class_count,
            index,
        }
    }

    /// H(n,2): binary words, classes by Hamming distance.
    pub fn hamming(n: u32) -> Result<Self> {
        let size = 1usize
            .checked_shl(n)
            .filter(|&s| s <= DENSE_VERTEX_CAP)
            .ok_or(Error::DimensionCapExceeded {
                vertices: 1usize.checked_shl(n).unwrap_or(usize::MAX),
                cap: DENSE_VERTEX_CAP,
            })?;
        let index = (0..size * size)
            .map(|k| ((k / size) ^ (k % size)).count_ones() as u16)
            .collect();
        Ok(Self::from_index(size, n as usize + 1, index))
    }

    /// `{I, J - I}` on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters("complete scheme needs n >= 2".into()));
        }
        let index = (0..n * n).map(|k| u16::from(k / n != k % n)).collect();
        Ok(Self::from_index(n, 2, index))
    }

    /// Cocktail party graph on `2n` vertices: class 1 is the graph, class 2
    /// the perfect matching of antipodes `x ↔ x ^ 1`.
    pub fn cocktail_party(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters("cocktail party needs n >= 2".into()));
        }
        let v = 2 * n;
        let index = (0..v * v)
            .map(|k| {
                let (x, y) = (k / v, k % v);
                if x == y {
                    0
                } else if x ^ 1 == y {
                    2
                } else {
                    1
                }
            })
            .collect();
        Ok(Self::from_index(v, 3, index))
    }

    /// Johnson scheme J(v, k): `k`-subsets, class `i` when they meet in `k - i`.
    pub fn johnson(v: u32, k: u32) -> Result<Self> {
        if k == 0 || 2 * k > v || v > 16 {
            return Err(Error::InvalidParameters(format!("J({v},{k}) is not supported")));
        }
        let sets: Vec<u32> = (0u32..1 << v).filter(|s| s.count_ones() == k).collect();
        let n = sets.len();
        if n > DENSE_VERTEX_CAP {
            return Err(Error::DimensionCapExceeded {
                vertices: n,
                cap: DENSE_VERTEX_CAP,
            });
        }
        let index = (0..n * n)
            .map(|i| (k - (sets[i / n] & sets[i % n]).count_ones()) as u16)
            .collect();
        Ok(Self::from_index(n, k as usize + 1, index))
    }

    /// The distance scheme of a graph, validated as an association scheme
    /// (so the graph must be distance-regular).
    pub fn distance_scheme(adjacency: &[Vec<u8>]) -> Result<Self> {
        let n = adjacency.len();
        if adjacency.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch("adjacency matrix is not square".into()));
        }
        let mut dist = vec![u16::MAX; n * n];
        for s in 0..n {
            dist[s * n + s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in 0..n {
                    if adjacency[x][y] != 0 && dist[s * n + y] == u16::MAX {
                        dist[s * n + y] = dist[s * n + x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        if dist.contains(&u16::MAX) {
            return Err(Error::InvalidParameters("graph is disconnected".into()));
        }
        let d = *dist.iter().max().unwrap() as usize;
        let classes: Vec<Vec<Vec<i64>>> = (0..=d)
            .map(|i| {
                (0..n)
                    .map(|x| (0..n).map(|y| i64::from(dist[x * n + y] as usize == i)).collect())
                    .collect()
            })
            .collect();
        validate_scheme(&classes)
    }

    /// Text form: a `d n` header, then `d + 1` blocks of `n` rows of 0/1.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.d(), self.vertex_count);
        for i in 0..self.class_count {
            for row in self.class_matrix(i) {
                let line: Vec<&str> = row.iter().map(|&b| if b == 1 { "1" } else { "0" }).collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
        }
        out
    }

    /// Parse the text form and validate.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let mut next = |what: &str| -> Result<i64> {
            tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("unexpected end of input reading {what}")))?
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{what}: {e}")))
        };
        let d = next("d")?;
        let n = next("n")?;
        if d < 0 || n <= 0 {
            return Err(Error::Parse(format!("bad header {d} {n}")));
        }
        let (d, n) = (d as usize, n as usize);
        if n > DENSE_VERTEX_CAP {
            return Err(Error::DimensionCapExceeded {
                vertices: n,
                cap: DENSE_VERTEX_CAP,
            });
        }
        let mut classes = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            let mut m = Vec::with_capacity(n);
            for _ in 0..n {
                let row = (0..n).map(|_| next("matrix entry")).collect::<Result<Vec<_>>>()?;
                m.push(row);
            }
            classes.push(m);
        }
        if tokens.next().is_some() {
            return Err(Error::Parse("trailing data after the last class".into()));
        }
        validate_scheme(&classes)
    }
}

/// Check the scheme axioms and build the class-index form.
///
/// Classes may be given in any order; the identity is moved to index 0 and
/// the rest keep their relative order. Closure is checked exactly: every
/// product `A_i A_j` must have entries constant on each class, which are
/// then its coefficients in the class basis.
pub fn validate_scheme(classes: &[Vec<Vec<i64>>]) -> Result<ExplicitScheme> {
    let Some(first) = classes.first() else {
        return Err(Error::DimensionMismatch("no classes given".into()));
    };
    let n = first.len();
    if n == 0 {
        return Err(Error::DimensionMismatch("empty matrices".into()));
    }
    if n > DENSE_VERTEX_CAP {
        return Err(Error::DimensionCapExceeded {
            vertices: n,
            cap: DENSE_VERTEX_CAP,
        });
    }
    if classes.len() > u16::MAX as usize {
        return Err(Error::DimensionMismatch("too many classes".into()));
    }
    for (i, m) in classes.iter().enumerate() {
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch(format!("class {i} is not {n} x {n}")));
        }
        if m.iter().flatten().any(|&v| v != 0 && v != 1) {
            return Err(Error::NotZeroOne(i));
        }
        if (0..n).any(|x| (x + 1..n).any(|y| m[x][y] != m[y][x])) {
            return Err(Error::NotSymmetric(i));
        }
        if m.iter().flatten().all(|&v| v == 0) {
            return Err(Error::EmptyClass(i));
        }
    }

    let is_identity = |m: &Vec<Vec<i64>>| (0..n).all(|x| (0..n).all(|y| m[x][y] == i64::from(x == y)));
    let id = classes.iter().position(is_identity).ok_or(Error::MissingIdentity)?;
    let order: Vec<usize> = std::iter::once(id)
        .chain((0..classes.len()).filter(|&i| i != id))
        .collect();

    let mut index = vec![u16::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            let mut count = 0;
            for (new, &old) in order.iter().enumerate() {
                if classes[old][x][y] == 1 {
                    index[x * n + y] = new as u16;
                    count += 1;
                }
            }
            if count != 1 {
                return Err(Error::NotPartition { row: x, col: y, count });
            }
        }
    }
    let scheme = ExplicitScheme::from_index(n, classes.len(), index);
    check_closure(&scheme).map_err(|(i, j)| Error::NotClosed(order[i], order[j]))?;
    Ok(scheme)
}

/// Exact closure check with bitset rows: `(A_i A_j)(x,y) = |row_i(x) ∧ row_j(y)|`
/// must depend only on the class of `(x, y)`.
fn check_closure(scheme: &ExplicitScheme) -> std::result::Result<(), (usize, usize)> {
    let n = scheme.vertex_count;
    let c = scheme.class_count;
    let words = n.div_ceil(64);
    // bits[i][x] = row x of class i
    let mut bits = vec![vec![0u64; n * words]; c];
    for x in 0..n {
        for y in 0..n {
            let i = scheme.class_of(x, y);
            bits[i][x * words + y / 64] |= 1 << (y % 64);
        }
    }
    for i in 1..c {
        for j in i..c {
            let mut coeff: Vec<Option<u32>> = vec![None; c];
            for x in 0..n {
                let rx = &bits[i][x * words..(x + 1) * words];
                for y in x..n {
                    let ry = &bits[j][y * words..(y + 1) * words];
                    let v: u32 = rx.iter().zip(ry).map(|(a, b)| (a & b).count_ones()).sum();
                    let k = scheme.class_of(x, y);
                    match coeff[k] {
                        None => coeff[k] = Some(v),
                        Some(w) if w == v => {}
                        Some(_) => return Err((i, j)),
                    }
                }
            }
        }
    }
    Ok(())
}

/// Classes that are fixed-point-free permutation matrices of order two.
pub fn find_order2_classes(scheme: &ExplicitScheme) -> Vec<usize> {
    scheme
        .valencies()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(i, &v)| v == 1 && is_involution(scheme, *i))
        .map(|(i, _)| i)
        .collect()
}

fn is_involution(scheme: &ExplicitScheme, q: usize) -> bool {
    let n = scheme.vertex_count;
    (0..n).all(|x| (0..n).filter(|&y| scheme.class_of(x, y) == q).count() == 1)
}

/// The common eigenspaces of a scheme, found numerically.
///
/// A generic combination `Σ c_i A_i` has exactly one eigenvalue per minimal
/// idempotent, so clustering its spectrum recovers the idempotents. The
/// matrix `eigenvalues[s][i]` is the eigenvalue of `A_i` on eigenspace `s`;
/// eigenspace 0 contains the all-ones vector.
#[derive(Clone, Debug)]
pub struct SchemeEigenbasis {
    /// Orthonormal basis of each eigenspace, as columns.
    pub spaces: Vec<DMatrix<f64>>,
    pub eigenvalues: Vec<Vec<f64>>,
}

impl SchemeEigenbasis {
    pub fn new(scheme: &ExplicitScheme) -> Result<Self> {
        let n = scheme.vertex_count;
        if n > DENSE_VERTEX_CAP {
            return Err(Error::DimensionCapExceeded {
                vertices: n,
                cap: DENSE_VERTEX_CAP,
            });
        }
        let c = scheme.class_count;
        // square roots of primes are linearly independent over the rationals
        let primes = first_primes(c);
        let coeffs: Vec<f64> = primes.iter().map(|&p| (p as f64).sqrt()).collect();
        let generic = DMatrix::from_fn(n, n, |x, y| {
            let k = scheme.class_of(x, y);
            if k == 0 {
                0.0
            } else {
                coeffs[k]
            }
        });
        let scale = coeffs.iter().sum::<f64>() * n as f64;
        let eig = SymmetricEigen::new(generic);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let tol = 1e-8 * scale.max(1.0);
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &k in &order {
            match groups.last_mut() {
                Some(g) if (eig.eigenvalues[k] - eig.eigenvalues[*g.last().unwrap()]).abs() < tol => g.push(k),
                _ => groups.push(vec![k]),
            }
        }
        if groups.len() != c {
            return Err(Error::Internal(format!(
                "found {} common eigenspaces, expected {c}",
                groups.len()
            )));
        }
        let mut spaces: Vec<DMatrix<f64>> = groups
            .iter()
            .map(|g| {
                DMatrix::from_columns(
                    &g.iter()
                        .map(|&k| eig.eigenvectors.column(k).into_owned())
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let ones = DVector::from_element(n, 1.0 / (n as f64).sqrt());
        let trivial = spaces
            .iter()
            .enumerate()
            .max_by(|a, b| {
                let pa = (a.1.transpose() * &ones).norm();
                let pb = (b.1.transpose() * &ones).norm();
                pa.total_cmp(&pb)
            })
            .map(|(i, _)| i)
            .unwrap();
        let e0 = spaces.remove(trivial);
        spaces.insert(0, e0);

        // eigenvalue of A_i on space s from one unit vector: v^T A_i v
        let eigenvalues = spaces
            .iter()
            .map(|space| {
                let v = space.column(0);
                let mut vals = vec![0.0; c];
                for x in 0..n {
                    for y in 0..n {
                        vals[scheme.class_of(x, y)] += v[x] * v[y];
                    }
                }
                vals
            })
            .collect();
        Ok(SchemeEigenbasis { spaces, eigenvalues })
    }

    /// Eigenvalue of `Σ w_i A_{c_i}` on each space.
    pub fn graph_eigenvalues(&self, classes: &[usize], weights: &[f64]) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .map(|row| classes.iter().zip(weights).map(|(&c, &w)| w * row[c]).sum())
            .collect()
    }

    /// Orthogonal projector onto space `s`.
    pub fn projector(&self, s: usize) -> DMatrix<f64> {
        let v = &self.spaces[s];
        v * v.transpose()
    }
}

fn first_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut p = 2u64;
    while primes.len() < count {
        if (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0) {
            primes.push(p);
        }
        p += 1;
    }
    primes
}

fn round_integer(x: f64) -> Result<BigInt> {
    let r = x.round();
    let distance = (x - r).abs();
    if distance >= INTEGRALITY_TOLERANCE {
        return Err(Error::NonIntegerEigenvalue { value: x, distance });
    }
    Ok(BigInt::from(r as i64))
}

/// Spectrum of the graph `Σ_{i ∈ graph_classes} A_i` with the signs of the
/// permutation class `A_q`.
///
/// Eigenvalues are rounded to integers and rejected if they are further than
/// [`INTEGRALITY_TOLERANCE`] away. `E_0` comes first, the rest by
/// descending eigenvalue.
pub fn spectrum_of(scheme: &ExplicitScheme, graph_classes: &[usize], q: usize) -> Result<SchemeSpectrum> {
    let basis = SchemeEigenbasis::new(scheme)?;
    spectrum_with_basis(scheme, &basis, graph_classes, q)
}

/// [`spectrum_of`] reusing a precomputed eigenbasis.
pub fn spectrum_with_basis(
    scheme: &ExplicitScheme,
    basis: &SchemeEigenbasis,
    graph_classes: &[usize],
    q: usize,
) -> Result<SchemeSpectrum> {
    if graph_classes.is_empty() {
        return Err(Error::InvalidParameters("graph needs at least one class".into()));
    }
    if let Some(&bad) = graph_classes.iter().find(|&&c| c == 0 || c > scheme.d()) {
        return Err(Error::InvalidParameters(format!(
            "class {bad} is not a non-identity class"
        )));
    }
    if q == 0 || q > scheme.d() || !find_order2_classes(scheme).contains(&q) {
        return Err(Error::NotPermutationClass(q));
    }
    let ones = vec![1.0; graph_classes.len()];
    let theta = basis.graph_eigenvalues(graph_classes, &ones);
    let mut rows: Vec<(BigInt, Sign)> = Vec::with_capacity(theta.len());
    for (s, t) in theta.iter().enumerate() {
        let sigma = match round_integer(basis.eigenvalues[s][q])?.to_string().as_str() {
            "1" => Sign::Plus,
            "-1" => Sign::Minus,
            _ => return Err(Error::NotPermutationClass(q)),
        };
        rows.push((round_integer(*t)?, sigma));
    }
    let mut rest = rows.split_off(1);
    rest.sort_by(|a, b| {
        b.0.cmp(&a.0)
            .then_with(|| (b.1 == Sign::Plus).cmp(&(a.1 == Sign::Plus)))
    });
    rows.extend(rest);
    let (theta, sigma): (Vec<BigInt>, Vec<Sign>) = rows.into_iter().unzip();
    SchemeSpectrum::new(theta.into_iter().map(BigRational::from_integer).collect(), sigma, None)
}

/// Maximum entrywise error of `Σ_s θ_s E_s` against the adjacency matrix.
pub fn reconstruction_error(scheme: &ExplicitScheme, basis: &SchemeEigenbasis, graph_classes: &[usize]) -> f64 {
    let ones = vec![1.0; graph_classes.len()];
    let theta = basis.graph_eigenvalues(graph_classes, &ones);
    let target = scheme.adjacency(graph_classes, &ones);
    let mut sum = DMatrix::zeros(scheme.vertex_count, scheme.vertex_count);
    for (s, t) in theta.iter().enumerate() {
        sum += basis.projector(s) * *t;
    }
    (sum - target).abs().max()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(spec: &SchemeSpectrum) -> (Vec<i64>, Vec<i64>) {
        (
            spec.theta()
                .iter()
                .map(|t| t.to_integer().try_into().unwrap())
                .collect(),
            spec.sigma().iter().map(|s| s.value()).collect(),
        )
    }

    fn raw(scheme: &ExplicitScheme) -> Vec<Vec<Vec<i64>>> {
        (0..=scheme.d())
            .map(|i| {
                scheme
                    .class_matrix(i)
                    .into_iter()
                    .map(|r| r.into_iter().map(i64::from).collect())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn four_cycle_is_a_scheme() {
        let h = ExplicitScheme::hamming(2).unwrap();
        let v = validate_scheme(&raw(&h)).unwrap();
        assert_eq!(v.d(), 2);
        assert_eq!(v, h);
    }

    #[test]
    fn complete_scheme_on_three() {
        let k = ExplicitScheme::complete(3).unwrap();
        assert_eq!(validate_scheme(&raw(&k)).unwrap().d(), 1);
    }

    #[test]
    fn identity_reordered() {
        let k = ExplicitScheme::complete(3).unwrap();
        let mut classes = raw(&k);
        classes.reverse();
        assert_eq!(validate_scheme(&classes).unwrap(), k);
    }

    #[test]
    fn axiom_violations() {
        let k = ExplicitScheme::complete(3).unwrap();
        let classes = raw(&k);
        assert_eq!(validate_scheme(&classes[1..]), Err(Error::MissingIdentity));

        let mut doubled = classes.clone();
        doubled.push(classes[1].clone());
        assert!(matches!(validate_scheme(&doubled), Err(Error::NotPartition { .. })));

        // split J - I on 3 vertices into an asymmetric pair
        let a = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]];
        let b = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
        assert_eq!(
            validate_scheme(&[classes[0].clone(), a, b]),
            Err(Error::NotSymmetric(1))
        );

        let two = vec![vec![0, 2, 2], vec![2, 0, 2], vec![2, 2, 0]];
        assert_eq!(validate_scheme(&[classes[0].clone(), two]), Err(Error::NotZeroOne(1)));

        // path on 3 vertices: distance classes are not closed
        let p1 = vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]];
        let p2 = vec![vec![0, 0, 1], vec![0, 0, 0], vec![1, 0, 0]];
        assert!(matches!(
            validate_scheme(&[classes[0].clone(), p1, p2]),
            Err(Error::NotClosed(..))
        ));
    }

    #[test]
    fn hamming_schemes_validate() {
        for n in 1..=6 {
            let h = ExplicitScheme::hamming(n).unwrap();
            assert_eq!(validate_scheme(&raw(&h)).unwrap(), h);
            assert_eq!(find_order2_classes(&h), vec![n as usize]);
        }
    }

    #[test]
    fn petersen_has_no_order_two_class() {
        // Petersen = Kneser K(5,2) = distance-2 graph of J(5,2)
        let j = ExplicitScheme::johnson(5, 2).unwrap();
        let petersen: Vec<Vec<u8>> = j.class_matrix(2);
        let scheme = ExplicitScheme::distance_scheme(&petersen).unwrap();
        assert_eq!(scheme.valencies(), vec![1, 3, 6]);
        assert!(find_order2_classes(&scheme).is_empty());
    }

    #[test]
    fn k2_order_two() {
        let k = ExplicitScheme::complete(2).unwrap();
        assert_eq!(find_order2_classes(&k), vec![1]);
        let s = spectrum_of(&k, &[1], 1).unwrap();
        assert_eq!(ints(&s), (vec![1, -1], vec![1, -1]));
    }

    #[test]
    fn cube_spectrum() {
        let h = ExplicitScheme::hamming(3).unwrap();
        let s = spectrum_of(&h, &[1], 3).unwrap();
        assert_eq!(ints(&s), (vec![3, 1, -1, -3], vec![1, -1, 1, -1]));
    }

    #[test]
    fn cocktail_party_spectrum() {
        let c = ExplicitScheme::cocktail_party(3).unwrap();
        assert_eq!(find_order2_classes(&c), vec![2]);
        let s = spectrum_of(&c, &[1], 2).unwrap();
        assert_eq!(ints(&s), (vec![4, 0, -2], vec![1, -1, 1]));
    }

    #[test]
    fn spectrum_errors() {
        let h = ExplicitScheme::hamming(3).unwrap();
        assert_eq!(spectrum_of(&h, &[1], 1), Err(Error::NotPermutationClass(1)));
        assert!(spectrum_of(&h, &[], 3).is_err());
        assert!(spectrum_of(&h, &[0], 3).is_err());
    }

    #[test]
    fn reconstruction() {
        let h = ExplicitScheme::hamming(4).unwrap();
        let basis = SchemeEigenbasis::new(&h).unwrap();
        for classes in [vec![1], vec![2], vec![1, 3]] {
            assert!(reconstruction_error(&h, &basis, &classes) < 1e-9);
        }
    }

    #[test]
    fn text_round_trip() {
        let c = ExplicitScheme::cocktail_party(2).unwrap();
        let text = c.to_text();
        assert!(text.starts_with("2 4\n"));
        assert_eq!(ExplicitScheme::from_text(&text).unwrap(), c);
        assert!(ExplicitScheme::from_text("1 2\n1 0\n0 1\n0 1").is_err());
    }

    #[test]
    fn dimension_cap() {
        assert!(matches!(
            ExplicitScheme::hamming(13),
            Err(Error::DimensionCapExceeded { .. })
        ));
    }
}
