//! Concrete encodings of A-infinity/C-infinity (co)algebra structures,
//! strict units, isotopies, and the PBW retraction between the associative
//! and commutative deformation complexes.
//!
//! Structures are stored in the shifted encoding: a classical product of
//! degree 0 becomes an arity-2 component of degree -1 on the suspended space
//! (algebra orientation) or the desuspended space (coalgebra orientation).

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::conv::{ConvContext, ConvElement, Flavor, UnitalSplit};
use crate::error::{Error, Result};
use crate::exact::{GradedSpace, MultilinearMap, Orientation, Perm, Q};
use crate::words::{act_on_inputs, eulerian_idempotents, shuffle_annihilated, GroupAlgebraElement};

// ---------------------------------------------------------------------------
// suspension bookkeeping
// ---------------------------------------------------------------------------

/// The shifted space a structure of this orientation lives on: `sV` for
/// algebras, `s^{-1}V` for coalgebras.
pub fn shifted_space(space: &GradedSpace, orientation: Orientation) -> Arc<GradedSpace> {
    let shift = match orientation {
        Orientation::Algebra => 1,
        Orientation::Coalgebra => -1,
    };
    Arc::new(space.suspend(shift))
}

/// Transport a map on `V` to the shifted space, conjugating by suspension
/// maps: `s o m o (s^{-1})^{(x)p}` for algebras, `(s^{-1})^{(x)q} o m o s`
/// for coalgebras. Only Koszul reordering signs are tracked: the `j`-th
/// desuspension factor moves past the preceding `j-1` tensor factors.
pub fn suspend_map(m: &MultilinearMap, shifted: &Arc<GradedSpace>) -> Result<MultilinearMap> {
    let arity = m.arity();
    let degree = m.degree() + 1 - arity as i64;
    let mut out = MultilinearMap::zero(shifted.clone(), arity, degree, m.orientation());
    for ((tuple, single), c) in m.entries() {
        let mut exponent = 0i64;
        let mut running = 0i64;
        for &t in tuple.iter() {
            exponent += running;
            running += match m.orientation() {
                // algebra: the desuspensions pass already-suspended factors
                Orientation::Algebra => shifted.degree(t),
                // coalgebra: they pass the unshifted output factors
                Orientation::Coalgebra => m.space().degree(t),
            };
        }
        let coeff = if exponent.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
        out.add_entry(tuple.clone(), *single, coeff)?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// binary (co)algebras as infinity-structures
// ---------------------------------------------------------------------------

/// An infinity-structure: a Maurer-Cartan element of its context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InftyStructure {
    element: ConvElement,
}

impl InftyStructure {
    pub fn new(element: ConvElement) -> Result<Self> {
        if element.degree() != -1 {
            return Err(Error::WrongElementDegree {
                expected: -1,
                got: element.degree(),
            });
        }
        let defect = element.mc_defect()?;
        if !defect.is_zero() {
            return Err(Error::NotMaurerCartan(defect.min_arity().unwrap()));
        }
        for m in element.components().values() {
            element.context().component_allowed(m)?;
        }
        Ok(InftyStructure { element })
    }

    pub fn zero(ctx: Arc<ConvContext>) -> Self {
        InftyStructure {
            element: ConvElement::zero(ctx, -1),
        }
    }

    pub fn element(&self) -> &ConvElement {
        &self.element
    }

    pub fn context(&self) -> &Arc<ConvContext> {
        self.element.context()
    }

    pub fn into_context(&self, ctx: &Arc<ConvContext>) -> Result<InftyStructure> {
        Ok(InftyStructure {
            element: self.element.into_context(ctx)?,
        })
    }
}

/// Embed a classical dg (co)algebra, given by its binary structure map and
/// differential on the unshifted space, as an infinity-structure concentrated
/// in arity 2.
///
/// (Co)associativity, (co)commutativity for commutative flavors, and the
/// Leibniz rule are checked, not assumed; violations are reported with the
/// offending basis tuple.
pub fn from_binary_algebra(
    product: &MultilinearMap,
    differential: Option<&MultilinearMap>,
    flavor: Flavor,
    arity_max: usize,
) -> Result<InftyStructure> {
    if product.arity() != 2 || product.degree() != 0 {
        return Err(Error::Invalid(
            "binary structure map must have arity 2 and degree 0".into(),
        ));
    }
    if flavor.is_strictly_unital() {
        return Err(Error::Invalid(
            "use su_context and a reduced structure for strictly unital flavors".into(),
        ));
    }
    let orientation = product.orientation();
    // (co)associativity: m o_1 m = m o_2 m, identical formula in the mirror
    let left = product.compose_at(product, 1)?;
    let right = product.compose_at(product, 2)?;
    if left != right {
        let diff = left.sub(&right)?;
        let ((tuple, single), _) = diff.entries().next().expect("nonzero difference");
        let mut names: Vec<String> = tuple
            .iter()
            .map(|&i| product.space().name(i).to_string())
            .collect();
        if orientation == Orientation::Coalgebra {
            names = vec![product.space().name(*single).to_string()];
            names.push(String::new());
            names.push(String::new());
        }
        return Err(Error::NotAssociative(
            names[0].clone(),
            names.get(1).cloned().unwrap_or_default(),
            names.get(2).cloned().unwrap_or_default(),
        ));
    }
    if flavor.is_commutative() {
        let swap = GroupAlgebraElement::single(Perm::from_one_line(&[2, 1])?, Q::one());
        let swapped = act_on_inputs(&swap, product)?;
        if swapped != *product {
            let diff = swapped.sub(product)?;
            let ((tuple, _), _) = diff.entries().next().expect("nonzero difference");
            return Err(Error::NotCommutative(
                product.space().name(tuple[0]).to_string(),
                product.space().name(tuple[1]).to_string(),
            ));
        }
    }
    if let Some(d) = differential {
        if d.arity() != 1 || d.degree() != -1 || d.orientation() != orientation {
            return Err(Error::Invalid(
                "differential must have arity 1 and degree -1".into(),
            ));
        }
        let dd = d.compose_at(d, 1)?;
        if !dd.is_zero() {
            let ((tuple, _), _) = dd.entries().next().expect("nonzero");
            return Err(Error::DifferentialSquare(
                d.space().name(tuple[0]).to_string(),
            ));
        }
        // Leibniz: d o_1 m = m o_1 d + m o_2 d (Koszul signs built in)
        let lhs = d.compose_at(product, 1)?;
        let rhs = product.compose_at(d, 1)?.add(&product.compose_at(d, 2)?)?;
        if lhs != rhs {
            let diff = lhs.sub(&rhs)?;
            let ((tuple, _), _) = diff.entries().next().expect("nonzero difference");
            let names: Vec<String> = tuple
                .iter()
                .map(|&i| product.space().name(i).to_string())
                .collect();
            return Err(Error::LeibnizFailure(names.join(", ")));
        }
    }
    let shifted = shifted_space(product.space(), orientation);
    let mut base = BTreeMap::new();
    if let Some(d) = differential {
        let sd = suspend_map(d, &shifted)?.scale(&-Q::one());
        if !sd.is_zero() {
            base.insert(1, sd);
        }
    }
    let ctx = ConvContext::new(shifted.clone(), orientation, flavor, arity_max, base)?;
    let b2 = suspend_map(product, &shifted)?;
    let element = ConvElement::from_components(ctx, -1, vec![b2])?;
    InftyStructure::new(element)
}

// ---------------------------------------------------------------------------
// strictly unital contexts
// ---------------------------------------------------------------------------

/// The strictly unital deformation context for a space with a chosen unit:
/// the base differential is `[mu0, -]` where `mu0` is the product with unit
/// `1` and vanishing products of complement elements; components of elements
/// are constrained to vanish on the unit line.
pub fn su_context(
    space: &GradedSpace,
    unit: &str,
    flavor: Flavor,
    arity_max: usize,
) -> Result<Arc<ConvContext>> {
    if !flavor.is_strictly_unital() {
        return Err(Error::Invalid(
            "su_context requires a strictly unital flavor".into(),
        ));
    }
    let unit_idx = space.index_of(unit)?;
    if space.degree(unit_idx) != 0 {
        return Err(Error::UnitDegree(unit.to_string(), space.degree(unit_idx)));
    }
    let unshifted = Arc::new(space.clone());
    let mut mu0 = MultilinearMap::zero(unshifted, 2, 0, Orientation::Algebra);
    for i in 0..space.dim() {
        mu0.add_entry(vec![unit_idx, i], i, Q::one())?;
        if i != unit_idx {
            mu0.add_entry(vec![i, unit_idx], i, Q::one())?;
        }
    }
    let shifted = shifted_space(space, Orientation::Algebra);
    let b0 = suspend_map(&mu0, &shifted)?;
    let mut base = BTreeMap::new();
    base.insert(2, b0.clone());
    let complement: Vec<usize> = (0..space.dim()).filter(|&i| i != unit_idx).collect();
    let split = UnitalSplit {
        unit: unit_idx,
        complement,
        mu0: b0,
    };
    ConvContext::with_unit(
        shifted,
        Orientation::Algebra,
        flavor,
        arity_max,
        base,
        Some(split),
    )
}

// ---------------------------------------------------------------------------
// the PBW retraction and the Harrison condition
// ---------------------------------------------------------------------------

/// Retraction onto the commutative-flavored complex: apply the first
/// Eulerian idempotent arity by arity. Fixes shuffle-annihilated elements
/// and produces shuffle-annihilated output.
pub fn pbw_retraction(f: &ConvElement, small: &Arc<ConvContext>) -> Result<ConvElement> {
    if !small.flavor().is_commutative() {
        return Err(Error::RetractionSetup(
            "retraction target must be a commutative flavor".into(),
        ));
    }
    if small.space() != f.context().space()
        || small.orientation() != f.context().orientation()
        || small.arity_max() != f.context().arity_max()
    {
        return Err(Error::ContextMismatch(
            "retraction target differs in space, orientation or truncation".into(),
        ));
    }
    let mut comps = Vec::new();
    for (n, m) in f.components() {
        let e1 = &eulerian_idempotents(*n)?[0];
        let proj = act_on_inputs(e1, m)?;
        if !proj.is_zero() {
            comps.push(proj);
        }
    }
    ConvElement::from_components(small.clone(), f.degree(), comps)
}

/// Witness of a Harrison-condition failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarrisonWitness {
    pub arity: usize,
    pub p: usize,
    pub q: usize,
    pub tuple: Vec<String>,
}

/// True iff every component is annihilated by every shuffle sum; on failure
/// the first violating `(p, q, tuple)` is returned.
pub fn harrison_check(f: &ConvElement) -> Result<std::result::Result<(), HarrisonWitness>> {
    for (n, m) in f.components() {
        if let Some(w) = shuffle_annihilated(m)? {
            return Ok(Err(HarrisonWitness {
                arity: *n,
                p: w.p,
                q: w.q,
                tuple: w.tuple,
            }));
        }
    }
    Ok(Ok(()))
}

// ---------------------------------------------------------------------------
// isotopies
// ---------------------------------------------------------------------------

/// An infinity-isotopy: arity-indexed degree-0 components with an implicit
/// identity linear term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isotopy {
    ctx: Arc<ConvContext>,
    components: BTreeMap<usize, MultilinearMap>,
}

impl Isotopy {
    pub fn identity(ctx: Arc<ConvContext>) -> Self {
        Isotopy {
            ctx,
            components: BTreeMap::new(),
        }
    }

    pub fn from_components(ctx: Arc<ConvContext>, components: Vec<MultilinearMap>) -> Result<Self> {
        let element = ConvElement::from_components(ctx.clone(), 0, components)?;
        Ok(Isotopy {
            ctx,
            components: element.components().clone(),
        })
    }

    /// The nonlinear components as a degree-0 element (a container reuse, not
    /// the gauge logarithm).
    pub fn as_element(&self) -> ConvElement {
        ConvElement::from_components_unchecked(self.ctx.clone(), 0, self.components.clone())
    }

    pub fn context(&self) -> &Arc<ConvContext> {
        &self.ctx
    }

    pub fn components(&self) -> &BTreeMap<usize, MultilinearMap> {
        &self.components
    }

    pub fn component(&self, n: usize) -> Option<&MultilinearMap> {
        self.components.get(&n)
    }

    pub fn is_identity(&self) -> bool {
        self.components.is_empty()
    }

    pub fn into_context(&self, ctx: &Arc<ConvContext>) -> Result<Isotopy> {
        let element = self.as_element().into_context(ctx)?;
        Ok(Isotopy {
            ctx: ctx.clone(),
            components: element.components().clone(),
        })
    }

    /// Component of the full morphism, with `f_1 = id` materialized.
    pub fn full_component(&self, n: usize) -> MultilinearMap {
        if n == 1 {
            MultilinearMap::identity(self.ctx.space().clone(), self.ctx.orientation())
        } else {
            self.components.get(&n).cloned().unwrap_or_else(|| {
                MultilinearMap::zero(self.ctx.space().clone(), n, 0, self.ctx.orientation())
            })
        }
    }
}

/// Ordered compositions of `m` into exactly `k` positive parts.
fn compositions(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 || k > m {
        return Vec::new();
    }
    if k == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for first in 1..=(m - k + 1) {
        for mut rest in compositions(m - first, k - 1) {
            let mut comp = vec![first];
            comp.append(&mut rest);
            out.push(comp);
        }
    }
    out
}

/// `sum_k sum_{j_1+..+j_k=n} d_k o (f_{j_1} (x) .. (x) f_{j_k})`: a
/// (co)derivation corestriction composed through the morphism `phi`. With
/// `skip_top` the all-ones composition at `k = n` (which carries the unknown
/// top component during transport) is omitted.
fn coderivation_through_morphism(
    outer: &BTreeMap<usize, MultilinearMap>,
    phi: &Isotopy,
    n: usize,
    skip_top: bool,
) -> Result<Option<MultilinearMap>> {
    let mut acc: Option<MultilinearMap> = None;
    for (k, d_k) in outer {
        if *k > n {
            continue;
        }
        for comp in compositions(n, *k) {
            if skip_top && *k == n {
                continue;
            }
            let inners: Vec<MultilinearMap> = comp.iter().map(|&j| phi.full_component(j)).collect();
            if inners.iter().any(|m| m.is_zero()) {
                continue;
            }
            let inner_refs: Vec<&MultilinearMap> = inners.iter().collect();
            let term = d_k.tensor_compose(&inner_refs)?;
            acc = Some(match acc {
                Some(cur) => cur.add(&term)?,
                None => term,
            });
        }
    }
    Ok(acc)
}

/// `sum_{p+q-1=n} sum_i compose_at(f_p, d_q, i)` with `f_1 = id` included.
/// With `skip_top` the `q = n` term (carrying the unknown top component
/// during mirrored transport) is omitted.
fn insertion_through_morphism(
    phi: &Isotopy,
    inner: &BTreeMap<usize, MultilinearMap>,
    n: usize,
    skip_top: bool,
) -> Result<Option<MultilinearMap>> {
    let mut acc: Option<MultilinearMap> = None;
    for (q, d_q) in inner {
        if *q > n {
            continue;
        }
        if skip_top && *q == n {
            continue;
        }
        let p = n + 1 - q;
        let f_p = phi.full_component(p);
        if f_p.is_zero() {
            continue;
        }
        for i in 1..=p {
            let term = f_p.compose_at(d_q, i)?;
            acc = Some(match acc {
                Some(cur) => cur.add(&term)?,
                None => term,
            });
        }
    }
    Ok(acc)
}

/// Transport a structure along an isotopy: the unique `m'` making `phi` an
/// infinity-isotopy `m -> m'` within truncation. The system is triangular in
/// the arity because the linear term is the identity.
pub fn transport_structure(phi: &Isotopy, m: &InftyStructure) -> Result<InftyStructure> {
    let ctx = phi.context().clone();
    let m_el = m.element().into_context(&ctx)?;
    let n_max = ctx.arity_max();
    // known side of the morphism equation: base + m
    let mut d_known: BTreeMap<usize, MultilinearMap> = ctx.base_components().clone();
    for (n, comp) in m_el.components() {
        let merged = match d_known.remove(n) {
            Some(cur) => cur.add(comp)?,
            None => comp.clone(),
        };
        d_known.insert(*n, merged);
    }
    // unknown side accumulates base + m' as the triangular solve proceeds
    let mut d_new: BTreeMap<usize, MultilinearMap> = ctx.base_components().clone();
    let mut m_new: BTreeMap<usize, MultilinearMap> = BTreeMap::new();
    for n in 2..=n_max {
        let (lhs, rhs_known) = match ctx.orientation() {
            Orientation::Algebra => (
                insertion_through_morphism(phi, &d_known, n, false)?,
                coderivation_through_morphism(&d_new, phi, n, true)?,
            ),
            Orientation::Coalgebra => (
                coderivation_through_morphism(&d_known, phi, n, false)?,
                insertion_through_morphism(phi, &d_new, n, true)?,
            ),
        };
        let zero = MultilinearMap::zero(ctx.space().clone(), n, -1, ctx.orientation());
        let lhs = lhs.unwrap_or_else(|| zero.clone());
        let rhs_known = rhs_known.unwrap_or_else(|| zero.clone());
        let base_n = ctx.base_components().get(&n).cloned().unwrap_or(zero);
        // the skipped top term is base_n + m'_n composed with identities
        let m_prime_n = lhs.sub(&rhs_known)?.sub(&base_n)?;
        if !m_prime_n.is_zero() {
            let merged = match d_new.remove(&n) {
                Some(cur) => cur.add(&m_prime_n)?,
                None => m_prime_n.clone(),
            };
            d_new.insert(n, merged);
            m_new.insert(n, m_prime_n);
        }
    }
    let ambient = ctx.with_flavor(ctx.flavor().associative_envelope())?;
    let element = ConvElement::from_components_unchecked(ambient, -1, m_new);
    InftyStructure::new(element)
}

/// The isotopy corresponding to a degree-0 gauge: the exponential of the
/// associated (co)derivation, computed arity by arity as an exact polynomial
/// flow in a formal time variable, evaluated at time one.
///
/// On the coalgebra side the convolution bracket is carried by the negated
/// derivation, so the dictionary exponentiates `-a` there; the transport
/// cross-check (`transport(iso(a), m) = gauge_act(a, m)`) pins this down.
pub fn isotopy_from_gauge(a: &ConvElement) -> Result<Isotopy> {
    if a.degree() != 0 {
        return Err(Error::WrongElementDegree {
            expected: 0,
            got: a.degree(),
        });
    }
    let ctx = a.context().clone();
    let gen = match ctx.orientation() {
        Orientation::Algebra => a.clone(),
        Orientation::Coalgebra => a.negate(),
    };
    let n_max = ctx.arity_max();
    let space = ctx.space().clone();
    let orientation = ctx.orientation();
    let mut polys: BTreeMap<usize, Vec<MultilinearMap>> = BTreeMap::new();
    polys.insert(1, vec![MultilinearMap::identity(space.clone(), orientation)]);
    for n in 2..=n_max {
        let max_pow = n;
        let mut rhs: Vec<MultilinearMap> = (0..max_pow)
            .map(|_| MultilinearMap::zero(space.clone(), n, 0, orientation))
            .collect();
        for (k, a_k) in gen.components() {
            if *k > n || *k < 2 {
                continue;
            }
            for comp in compositions(n, *k) {
                let parts: Vec<&Vec<MultilinearMap>> = comp
                    .iter()
                    .map(|j| polys.get(j).expect("triangular order"))
                    .collect();
                let mut splits: Vec<Vec<usize>> = vec![Vec::new()];
                for part in &parts {
                    splits = splits
                        .into_iter()
                        .flat_map(|s| {
                            (0..part.len()).map(move |e| {
                                let mut s2 = s.clone();
                                s2.push(e);
                                s2
                            })
                        })
                        .collect();
                }
                for exps in splits {
                    let total: usize = exps.iter().sum();
                    if total >= max_pow {
                        continue;
                    }
                    let inners: Vec<&MultilinearMap> =
                        parts.iter().zip(&exps).map(|(p, &e)| &p[e]).collect();
                    if inners.iter().any(|m| m.is_zero()) {
                        continue;
                    }
                    let term = a_k.tensor_compose(&inners)?;
                    rhs[total] = rhs[total].add(&term)?;
                }
            }
        }
        let mut poly: Vec<MultilinearMap> =
            vec![MultilinearMap::zero(space.clone(), n, 0, orientation)];
        for (e, r) in rhs.into_iter().enumerate() {
            poly.push(r.scale(&(Q::one() / Q::from_integer(((e + 1) as i64).into()))));
        }
        polys.insert(n, poly);
    }
    let mut comps = Vec::new();
    for n in 2..=n_max {
        let poly = &polys[&n];
        let mut total = MultilinearMap::zero(space.clone(), n, 0, orientation);
        for c in poly {
            total = total.add(c)?;
        }
        if !total.is_zero() {
            comps.push(total);
        }
    }
    Isotopy::from_components(ctx.with_flavor(ctx.flavor().associative_envelope())?, comps)
}

/// Invert the gauge/isotopy dictionary: the unique degree-0 `a` with
/// `isotopy_from_gauge(a) = phi`, solved arity by arity. Adding an arity-`n`
/// gauge component changes the isotopy at arity `n` by exactly itself (up to
/// the coalgebra-side sign), so each step is a direct correction.
pub fn gauge_from_isotopy(phi: &Isotopy) -> Result<ConvElement> {
    let ctx = phi.context().clone();
    let sign = match ctx.orientation() {
        Orientation::Algebra => Q::one(),
        Orientation::Coalgebra => -Q::one(),
    };
    let mut a = ConvElement::zero(ctx.clone(), 0);
    for n in 2..=ctx.arity_max() {
        let cur = isotopy_from_gauge(&a)?;
        let delta = phi.full_component(n).sub(&cur.full_component(n))?;
        if !delta.is_zero() {
            let mut comps = a.components().clone();
            comps.insert(n, delta.scale(&sign));
            a = ConvElement::from_components_unchecked(ctx.clone(), 0, comps);
        }
    }
    let check = isotopy_from_gauge(&a)?;
    for n in 2..=ctx.arity_max() {
        if check.full_component(n) != phi.full_component(n) {
            return Err(Error::NotAnIsotopy(n));
        }
    }
    Ok(a)
}

/// Composition of isotopies in conjugation order:
/// `transport(compose(f, g), m) = transport(f, transport(g, m))`.
pub fn compose_isotopies(f: &Isotopy, g: &Isotopy) -> Result<Isotopy> {
    if f.context() != g.context() {
        return Err(Error::ContextMismatch("isotopy composition".into()));
    }
    let ctx = f.context().clone();
    let n_max = ctx.arity_max();
    let mut comps = Vec::new();
    for n in 2..=n_max {
        let mut acc = MultilinearMap::zero(ctx.space().clone(), n, 0, ctx.orientation());
        for k in 1..=n {
            for comp in compositions(n, k) {
                let (outer, inner): (MultilinearMap, Vec<MultilinearMap>) = match ctx.orientation()
                {
                    Orientation::Algebra => (
                        f.full_component(k),
                        comp.iter().map(|&j| g.full_component(j)).collect(),
                    ),
                    Orientation::Coalgebra => (
                        g.full_component(k),
                        comp.iter().map(|&j| f.full_component(j)).collect(),
                    ),
                };
                if outer.is_zero() || inner.iter().any(|m| m.is_zero()) {
                    continue;
                }
                let refs: Vec<&MultilinearMap> = inner.iter().collect();
                acc = acc.add(&outer.tensor_compose(&refs)?)?;
            }
        }
        if !acc.is_zero() {
            comps.push(acc);
        }
    }
    Isotopy::from_components(ctx, comps)
}

#[cfg(test)]
mod structures_tests;
