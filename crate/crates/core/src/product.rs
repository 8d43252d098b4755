//! External and internal direct products and the wreath product, together
//! with the canonical point/element encodings the structure checks rely on.
//!
//! Encodings, fixed once:
//! - external product on `V x W`: point `(v, w) -> v*|W| + w`;
//! - internal product on the disjoint union: block `i` at offset
//!   `deg_0 + .. + deg_{i-1}`;
//! - wreath product `G wr H` on `V x {0..n-1}`: point `(a, i) -> i*|V| + a`,
//!   so layer `i` occupies a contiguous block.

use crate::action::GroupAction;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Flattens the pair `(g, h)` to a permutation of `V x W`, row-major.
pub fn flatten_pair(g: &Permutation, h: &Permutation) -> Permutation {
    let (dv, dw) = (g.degree(), h.degree());
    let mut images = vec![0; dv * dw];
    for v in 0..dv {
        for w in 0..dw {
            images[v * dw + w] = g.apply(v) * dw + h.apply(w);
        }
    }
    Permutation::from_images(images).unwrap()
}

/// Inverse of `flatten_pair`; `None` if the permutation does not preserve the
/// product structure.
pub fn split_pair(p: &Permutation, dv: usize, dw: usize) -> Option<(Permutation, Permutation)> {
    if p.degree() != dv * dw || dv == 0 || dw == 0 {
        return None;
    }
    let g_images: Vec<usize> = (0..dv).map(|v| p.apply(v * dw) / dw).collect();
    let h_images: Vec<usize> = (0..dw).map(|w| p.apply(w) % dw).collect();
    let g = Permutation::from_images(g_images).ok()?;
    let h = Permutation::from_images(h_images).ok()?;
    if flatten_pair(&g, &h) == *p {
        Some((g, h))
    } else {
        None
    }
}

/// External direct product `G x H` acting on `V x W`. A degree-1 trivial
/// factor is the identity of this construction and returns the other factor
/// unchanged.
pub fn external_product(g: &GroupAction, h: &GroupAction, cap: usize) -> Result<GroupAction> {
    if g.order() == 1 && g.degree() == 1 {
        return Ok(h.clone());
    }
    if h.order() == 1 && h.degree() == 1 {
        return Ok(g.clone());
    }
    let order = g
        .order()
        .checked_mul(h.order())
        .ok_or_else(|| Error::Overflow("product order".into()))?;
    if order > cap {
        return Err(Error::ElementCap { cap, needed: order });
    }
    let mut elements = Vec::with_capacity(order);
    for a in g.elements() {
        for b in h.elements() {
            elements.push(flatten_pair(a, b));
        }
    }
    let idg = Permutation::identity(g.degree());
    let idh = Permutation::identity(h.degree());
    let mut generators = Vec::new();
    for a in g.generators() {
        generators.push(flatten_pair(a, &idh));
    }
    for b in h.generators() {
        generators.push(flatten_pair(&idg, b));
    }
    let labels = (0..g.degree())
        .flat_map(|v| {
            (0..h.degree())
                .map(move |w| (v, w))
        })
        .map(|(v, w)| format!("({},{})", g.point_label(v), h.point_label(w)))
        .collect();
    Ok(GroupAction::from_known_elements(g.degree() * h.degree(), generators, elements)
        .with_point_labels(labels))
}

/// Left-associated n-ary external product.
pub fn external_product_many(factors: &[&GroupAction], cap: usize) -> Result<GroupAction> {
    match factors {
        [] => Err(Error::Spec("external product needs at least one factor".into())),
        [only] => Ok((*only).clone()),
        [first, rest @ ..] => {
            let mut acc = (*first).clone();
            for f in rest {
                acc = external_product(&acc, f, cap)?;
            }
            Ok(acc)
        }
    }
}

/// Flattens a tuple of factor elements to a permutation of the disjoint union.
pub fn flatten_blocks(parts: &[&Permutation]) -> Permutation {
    let total: usize = parts.iter().map(|p| p.degree()).sum();
    let mut images = Vec::with_capacity(total);
    let mut offset = 0;
    for p in parts {
        images.extend((0..p.degree()).map(|a| offset + p.apply(a)));
        offset += p.degree();
    }
    Permutation::from_images(images).unwrap()
}

/// Inverse of `flatten_blocks` for the given block degrees; `None` if some
/// block is not invariant.
pub fn split_blocks(p: &Permutation, degrees: &[usize]) -> Option<Vec<Permutation>> {
    if p.degree() != degrees.iter().sum::<usize>() {
        return None;
    }
    let mut parts = Vec::with_capacity(degrees.len());
    let mut offset = 0;
    for &d in degrees {
        let mut images = Vec::with_capacity(d);
        for a in 0..d {
            let y = p.apply(offset + a);
            if y < offset || y >= offset + d {
                return None;
            }
            images.push(y - offset);
        }
        parts.push(Permutation::from_images(images).ok()?);
        offset += d;
    }
    Some(parts)
}

/// Internal direct product: factors act independently on the disjoint union
/// of their domains. With at least two non-trivial factors this action is
/// never transitive; the factor domains are exactly its blocks.
pub fn internal_product(factors: &[&GroupAction], cap: usize) -> Result<GroupAction> {
    match factors {
        [] => return Err(Error::Spec("internal product needs at least one factor".into())),
        [only] => return Ok((*only).clone()),
        _ => {}
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .ok_or_else(|| Error::Overflow("product order".into()))?;
    if order > cap {
        return Err(Error::ElementCap { cap, needed: order });
    }
    let degree: usize = factors.iter().map(|f| f.degree()).sum();
    let mut elements = Vec::with_capacity(order);
    let mut tuple = vec![0usize; factors.len()];
    loop {
        let parts: Vec<&Permutation> =
            tuple.iter().zip(factors).map(|(&i, f)| f.element(i)).collect();
        elements.push(flatten_blocks(&parts));
        // Mixed-radix increment, last position fastest.
        let mut pos = factors.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < factors[pos].order() {
                break;
            }
            tuple[pos] = 0;
        }
        if tuple.iter().all(|&i| i == 0) {
            break;
        }
    }
    let mut generators = Vec::new();
    for (k, f) in factors.iter().enumerate() {
        for g in f.generators() {
            let parts: Vec<Permutation> = factors
                .iter()
                .enumerate()
                .map(|(j, other)| {
                    if j == k {
                        g.clone()
                    } else {
                        Permutation::identity(other.degree())
                    }
                })
                .collect();
            generators.push(flatten_blocks(&parts.iter().collect::<Vec<_>>()));
        }
    }
    let labels = factors
        .iter()
        .enumerate()
        .flat_map(|(k, f)| (0..f.degree()).map(move |a| format!("{}:{}", k + 1, f.point_label(a))))
        .collect();
    Ok(GroupAction::from_known_elements(degree, generators, elements).with_point_labels(labels))
}

/// An element of `G wr H` in structured form: `n` inner elements of `G` (one
/// per point of `H`'s domain) and an outer element of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathElement {
    pub inner: Vec<Permutation>,
    pub outer: Permutation,
}

impl WreathElement {
    pub fn identity(inner_degree: usize, n: usize) -> Self {
        WreathElement {
            inner: vec![Permutation::identity(inner_degree); n],
            outer: Permutation::identity(n),
        }
    }

    /// Product with `other` acting first: the inner component at position `i`
    /// is `self.inner[other.outer(i)] * other.inner[i]`, the outer component
    /// is `self.outer * other.outer`.
    pub fn multiply(&self, other: &WreathElement) -> WreathElement {
        let n = self.inner.len();
        debug_assert_eq!(n, other.inner.len());
        let inner = (0..n)
            .map(|i| self.inner[other.outer.apply(i)].compose(&other.inner[i]))
            .collect();
        WreathElement { inner, outer: self.outer.compose(&other.outer) }
    }

    /// Inverse: position `i` carries `self.inner[self.outer^-1(i)]^-1`.
    pub fn invert(&self) -> WreathElement {
        let outer_inv = self.outer.inverse();
        let inner = (0..self.inner.len())
            .map(|i| self.inner[outer_inv.apply(i)].inverse())
            .collect();
        WreathElement { inner, outer: outer_inv }
    }

    /// The action on `V x {0..n-1}`: `(a, i) -> (inner[i](a), outer(i))`,
    /// with point encoding `(a, i) -> i*|V| + a`.
    pub fn flatten(&self) -> Permutation {
        let dv = self.inner.first().map_or(0, Permutation::degree);
        let n = self.inner.len();
        let mut images = vec![0; dv * n];
        for i in 0..n {
            let block = self.outer.apply(i) * dv;
            for a in 0..dv {
                images[i * dv + a] = block + self.inner[i].apply(a);
            }
        }
        Permutation::from_images(images).unwrap()
    }

    /// Inverse of `flatten`; `None` if the permutation does not respect the
    /// layer structure.
    pub fn unflatten(p: &Permutation, inner_degree: usize, n: usize) -> Option<WreathElement> {
        if inner_degree == 0 || p.degree() != inner_degree * n {
            return None;
        }
        let mut outer_images = Vec::with_capacity(n);
        let mut inner = Vec::with_capacity(n);
        for i in 0..n {
            let block = p.apply(i * inner_degree) / inner_degree;
            outer_images.push(block);
            let mut images = Vec::with_capacity(inner_degree);
            for a in 0..inner_degree {
                let y = p.apply(i * inner_degree + a);
                if y / inner_degree != block {
                    return None;
                }
                images.push(y % inner_degree);
            }
            inner.push(Permutation::from_images(images).ok()?);
        }
        let outer = Permutation::from_images(outer_images).ok()?;
        Some(WreathElement { inner, outer })
    }

    /// Row-major index of the inner tuple with respect to `g`: the position-0
    /// component is the most significant digit.
    pub fn tuple_index(&self, g: &GroupAction) -> usize {
        self.inner.iter().fold(0, |acc, p| {
            acc * g.order() + g.id_of(p).expect("inner component lies in G")
        })
    }
}

/// Wreath product `G wr H` where `H` acts on `{0..n-1}`: all tuples of `n`
/// elements of `G` extended by `H` permuting the layers. Order is
/// `|G|^n * |H|`. `H` trivial on one point returns `G` unchanged.
pub fn wreath_product(g: &GroupAction, h: &GroupAction, cap: usize) -> Result<GroupAction> {
    let n = h.degree();
    if n == 1 && h.order() == 1 {
        return Ok(g.clone());
    }
    if g.degree() == 0 || n == 0 {
        return Err(Error::Spec("wreath product needs non-empty domains".into()));
    }
    let mut order = h.order();
    for _ in 0..n {
        order = order
            .checked_mul(g.order())
            .ok_or_else(|| Error::Overflow("wreath order".into()))?;
        if order > cap {
            return Err(Error::ElementCap { cap, needed: order });
        }
    }
    let dv = g.degree();
    let mut elements = Vec::with_capacity(order);
    let mut tuple = vec![0usize; n];
    loop {
        let inner: Vec<Permutation> =
            tuple.iter().map(|&i| g.element(i).clone()).collect();
        for outer in h.elements() {
            elements.push(WreathElement { inner: inner.clone(), outer: outer.clone() }.flatten());
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < g.order() {
                break;
            }
            tuple[pos] = 0;
        }
        if tuple.iter().all(|&i| i == 0) {
            break;
        }
    }
    let mut generators = Vec::new();
    for pos in 0..n {
        for gen in g.generators() {
            let mut inner = vec![Permutation::identity(dv); n];
            inner[pos] = gen.clone();
            generators
                .push(WreathElement { inner, outer: Permutation::identity(n) }.flatten());
        }
    }
    for gen in h.generators() {
        generators.push(
            WreathElement {
                inner: vec![Permutation::identity(dv); n],
                outer: gen.clone(),
            }
            .flatten(),
        );
    }
    let labels = (0..n)
        .flat_map(|i| (0..dv).map(move |a| (a, i)))
        .map(|(a, i)| format!("({},{})", g.point_label(a), i + 1))
        .collect();
    Ok(GroupAction::from_known_elements(dv * n, generators, elements).with_point_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::DEFAULT_ELEMENT_CAP as CAP;
    use crate::builders::{cyclic_regular, symmetric_natural, trivial};

    #[test]
    fn external_s3_x_s2() {
        let s3 = symmetric_natural(3, CAP).unwrap();
        let s2 = symmetric_natural(2, CAP).unwrap();
        let p = external_product(&s3, &s2, CAP).unwrap();
        assert_eq!(p.degree(), 6);
        assert_eq!(p.order(), 12);
        assert!(p.is_transitive());
        assert!(p.verify_closed());
        assert_eq!(p.point_label(0), "(1,1)");
        // Point (v,w) -> v*2 + w; ((1 2), id) swaps (1,w) <-> (2,w).
        let g = flatten_pair(
            &Permutation::parse_cycles("(1 2)", 3).unwrap(),
            &Permutation::identity(2),
        );
        assert_eq!(g.images(), &[2, 3, 0, 1, 4, 5]);
        assert!(p.id_of(&g).is_some());
    }

    #[test]
    fn external_with_trivial_point_is_identity_construction() {
        let s4 = symmetric_natural(4, CAP).unwrap();
        let t = trivial(1);
        let p = external_product(&s4, &t, CAP).unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(p.order(), 24);
        assert_eq!(p.elements(), s4.elements());
        let q = external_product(&t, &s4, CAP).unwrap();
        assert_eq!(q.elements(), s4.elements());
    }

    #[test]
    fn split_pair_round_trip() {
        let s3 = symmetric_natural(3, CAP).unwrap();
        let c4 = cyclic_regular(4).unwrap();
        for a in s3.elements() {
            for b in c4.elements() {
                let flat = flatten_pair(a, b);
                let (ga, gb) = split_pair(&flat, 3, 4).unwrap();
                assert_eq!(&ga, a);
                assert_eq!(&gb, b);
            }
        }
    }

    #[test]
    fn internal_product_of_three_s2() {
        let s2 = symmetric_natural(2, CAP).unwrap();
        let p = internal_product(&[&s2, &s2, &s2], CAP).unwrap();
        assert_eq!(p.degree(), 6);
        assert_eq!(p.order(), 8);
        assert!(!p.is_transitive());
        assert_eq!(p.orbits().len(), 3);
        assert!(p.verify_closed());
    }

    #[test]
    fn internal_product_stabilizers() {
        let s3 = symmetric_natural(3, CAP).unwrap();
        let p = internal_product(&[&s3, &s3], CAP).unwrap();
        assert_eq!(p.order(), 36);
        // Stabilizer of a point in block 1: G_v x S3, order 2*6.
        assert_eq!(p.stabilizer_order(0), 12);
        assert_eq!(p.max_stabilizer_order(), 12);
    }

    #[test]
    fn split_blocks_round_trip() {
        let s3 = symmetric_natural(3, CAP).unwrap();
        let s2 = symmetric_natural(2, CAP).unwrap();
        let p = internal_product(&[&s3, &s2], CAP).unwrap();
        for e in p.elements() {
            let parts = split_blocks(e, &[3, 2]).unwrap();
            assert_eq!(flatten_blocks(&parts.iter().collect::<Vec<_>>()), *e);
            assert!(s3.id_of(&parts[0]).is_some());
            assert!(s2.id_of(&parts[1]).is_some());
        }
        // A permutation mixing blocks is rejected.
        let mixer = Permutation::parse_cycles("(1 4)", 5).unwrap();
        assert!(split_blocks(&mixer, &[3, 2]).is_none());
    }

    #[test]
    fn wreath_s2_wr_s2_is_dihedral_order_8() {
        let s2 = symmetric_natural(2, CAP).unwrap();
        let w = wreath_product(&s2, &s2, CAP).unwrap();
        assert_eq!(w.degree(), 4);
        assert_eq!(w.order(), 8);
        assert!(w.is_transitive());
        assert!(w.verify_closed());
    }

    #[test]
    fn wreath_s3_wr_s2() {
        let s3 = symmetric_natural(3, CAP).unwrap();
        let s2 = symmetric_natural(2, CAP).unwrap();
        let w = wreath_product(&s3, &s2, CAP).unwrap();
        assert_eq!(w.degree(), 6);
        assert_eq!(w.order(), 72);
        assert!(w.is_transitive());
        assert!(w.verify_closed());
        assert_eq!(w.stabilizer_order(0), 12);
        // Generators generate the whole wreath product.
        let closure = GroupAction::from_generators(6, w.generators().to_vec(), CAP).unwrap();
        assert_eq!(closure.order(), 72);
    }

    #[test]
    fn wreath_multiply_matches_flattened_composition() {
        let s3 = symmetric_natural(3, CAP).unwrap();
        let s2 = symmetric_natural(2, CAP).unwrap();
        let w = wreath_product(&s3, &s2, CAP).unwrap();
        for x in w.elements() {
            let wx = WreathElement::unflatten(x, 3, 2).unwrap();
            assert_eq!(wx.flatten(), *x);
            for y in w.elements() {
                let wy = WreathElement::unflatten(y, 3, 2).unwrap();
                assert_eq!(wx.multiply(&wy).flatten(), x.compose(y));
            }
            assert_eq!(wx.invert().flatten(), x.inverse());
        }
    }

    #[test]
    fn wreath_trivial_outer_returns_inner() {
        let s4 = symmetric_natural(4, CAP).unwrap();
        let w = wreath_product(&s4, &trivial(1), CAP).unwrap();
        assert_eq!(w.elements(), s4.elements());
    }

    #[test]
    fn wreath_cap() {
        let s4 = symmetric_natural(4, CAP).unwrap();
        let err = wreath_product(&s4, &s4, CAP).unwrap_err();
        assert!(matches!(err, Error::ElementCap { .. }));
    }

    #[test]
    fn tuple_index_is_row_major() {
        let s3 = symmetric_natural(3, CAP).unwrap();
        let e = WreathElement {
            inner: vec![s3.element(1).clone(), s3.element(4).clone()],
            outer: Permutation::identity(2),
        };
        assert_eq!(e.tuple_index(&s3), 6 + 4);
    }
}
