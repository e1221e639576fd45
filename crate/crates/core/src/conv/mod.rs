//! Truncated convolution dg Lie algebras.
//!
//! Elements are arity-indexed families of multilinear maps on the suspended
//! space, all components of one homogeneous degree (the shifted encoding: an
//! A-infinity structure is a single degree `-1` element, a gauge is a degree
//! `0` element). The arity filtration `F^p` consists of elements supported in
//! arities `>= p + 1`; every identity holds modulo the truncation arity.

mod bch;

pub use bch::{bch_bracket_table, BchTerm};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{GradedSpace, MultilinearMap, Orientation, Q};
use crate::words::shuffle_annihilated;

/// Structure flavor of a convolution context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    AInfinity,
    CInfinity,
    SuAInfinity,
    SuCInfinity,
}

impl Flavor {
    pub fn is_commutative(&self) -> bool {
        matches!(self, Flavor::CInfinity | Flavor::SuCInfinity)
    }

    pub fn is_strictly_unital(&self) -> bool {
        matches!(self, Flavor::SuAInfinity | Flavor::SuCInfinity)
    }

    /// The associative flavor with the same unitality.
    pub fn associative_envelope(&self) -> Flavor {
        match self {
            Flavor::CInfinity => Flavor::AInfinity,
            Flavor::SuCInfinity => Flavor::SuAInfinity,
            f => *f,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Flavor::AInfinity => "a-infinity",
            Flavor::CInfinity => "c-infinity",
            Flavor::SuAInfinity => "su-a-infinity",
            Flavor::SuCInfinity => "su-c-infinity",
        };
        write!(f, "{s}")
    }
}

/// Data of a strict unit: the unit line and its complement inside the
/// (suspended) space, together with the unital product `mu0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitalSplit {
    pub unit: usize,
    pub complement: Vec<usize>,
    pub mu0: MultilinearMap,
}

/// The ambient data of a truncated convolution dg Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvContext {
    space: Arc<GradedSpace>,
    orientation: Orientation,
    flavor: Flavor,
    arity_max: usize,
    /// Degree `-1` family representing the differential: `d(f) = [base, f]`.
    /// An arity-1 component is the internal differential of the space; an
    /// arity-2 component appears after twisting (for example by `mu0`).
    base: BTreeMap<usize, MultilinearMap>,
    unit_split: Option<UnitalSplit>,
}

impl ConvContext {
    pub fn new(
        space: Arc<GradedSpace>,
        orientation: Orientation,
        flavor: Flavor,
        arity_max: usize,
        base: BTreeMap<usize, MultilinearMap>,
    ) -> Result<Arc<Self>> {
        Self::with_unit(space, orientation, flavor, arity_max, base, None)
    }

    pub fn with_unit(
        space: Arc<GradedSpace>,
        orientation: Orientation,
        flavor: Flavor,
        arity_max: usize,
        base: BTreeMap<usize, MultilinearMap>,
        unit_split: Option<UnitalSplit>,
    ) -> Result<Arc<Self>> {
        if arity_max < 2 {
            return Err(Error::Invalid("arity_max must be at least 2".into()));
        }
        for (n, m) in &base {
            if *n < 1 || *n > arity_max {
                return Err(Error::Invalid(format!("base differential arity {n} out of range")));
            }
            if m.arity() != *n || m.degree() != -1 || m.space() != &space || m.orientation() != orientation
            {
                return Err(Error::Invalid("malformed base differential component".into()));
            }
        }
        if flavor.is_strictly_unital() && unit_split.is_none() {
            return Err(Error::Invalid(
                "strictly unital flavors require a unit split".into(),
            ));
        }
        let ctx = Arc::new(ConvContext {
            space,
            orientation,
            flavor,
            arity_max,
            base,
            unit_split,
        });
        // base differential must square to zero within truncation
        let b = ctx.base_element();
        let sq = b.bracket(&b)?;
        if !sq.is_zero() {
            let arity = sq.min_arity().expect("nonzero element");
            return Err(Error::Invalid(format!(
                "base differential does not square to zero: [d,d] nonzero in arity {arity}"
            )));
        }
        Ok(ctx)
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn arity_max(&self) -> usize {
        self.arity_max
    }

    pub fn unit_split(&self) -> Option<&UnitalSplit> {
        self.unit_split.as_ref()
    }

    pub fn base_components(&self) -> &BTreeMap<usize, MultilinearMap> {
        &self.base
    }

    /// The base differential as a degree `-1` element of this context
    /// (arity-1 parts included).
    pub fn base_element(self: &Arc<Self>) -> ConvElement {
        ConvElement {
            ctx: self.clone(),
            degree: -1,
            components: self.base.clone(),
        }
    }

    /// A context identical to this one except for the flavor tag.
    pub fn with_flavor(self: &Arc<Self>, flavor: Flavor) -> Result<Arc<ConvContext>> {
        ConvContext::with_unit(
            self.space.clone(),
            self.orientation,
            flavor,
            self.arity_max,
            self.base.clone(),
            self.unit_split.clone(),
        )
    }

    /// Twist by a Maurer-Cartan element: the new base differential is
    /// `d + [x, -]`, same filtration.
    pub fn twist(self: &Arc<Self>, x: &ConvElement) -> Result<Arc<ConvContext>> {
        x.expect_context(self)?;
        let defect = x.mc_defect()?;
        if !defect.is_zero() {
            return Err(Error::NotMaurerCartan(defect.min_arity().unwrap()));
        }
        let base = self.base_element().add(x)?;
        ConvContext::with_unit(
            self.space.clone(),
            self.orientation,
            self.flavor,
            self.arity_max,
            base.components,
            self.unit_split.clone(),
        )
    }

    /// Does a (shifted-encoding) component satisfy this context's flavor
    /// constraint?
    pub fn component_allowed(&self, m: &MultilinearMap) -> Result<()> {
        if self.flavor.is_commutative() {
            if let Some(w) = shuffle_annihilated(m)? {
                return Err(Error::FlavorViolation(format!(
                    "component of arity {} not annihilated by shuffle_sum({}, {}): tuple ({})",
                    m.arity(),
                    w.p,
                    w.q,
                    w.tuple.join(", ")
                )));
            }
        }
        if let (true, Some(split)) = (self.flavor.is_strictly_unital(), self.unit_split.as_ref()) {
            for ((tuple, single), _) in m.entries() {
                if tuple.contains(&split.unit) {
                    return Err(Error::FlavorViolation(format!(
                        "component of arity {} does not vanish on the unit line: tuple contains `{}`, output `{}`",
                        m.arity(),
                        self.space.name(split.unit),
                        self.space.name(*single),
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Filtration degree with the `+infinity` sentinel for the zero element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filtration {
    Finite(usize),
    Infinite,
}

impl PartialOrd for Filtration {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Filtration {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Filtration::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Filtration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filtration::Finite(p) => write!(f, "{p}"),
            Filtration::Infinite => write!(f, "inf"),
        }
    }
}

impl Filtration {
    pub fn plus(&self, other: &Filtration) -> Filtration {
        match (self, other) {
            (Filtration::Finite(a), Filtration::Finite(b)) => Filtration::Finite(a + b),
            _ => Filtration::Infinite,
        }
    }
}

/// An element of a truncated convolution dg Lie algebra: one multilinear map
/// per arity, all of the same homogeneous degree in the shifted encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvElement {
    ctx: Arc<ConvContext>,
    degree: i64,
    components: BTreeMap<usize, MultilinearMap>,
}

impl ConvElement {
    pub fn zero(ctx: Arc<ConvContext>, degree: i64) -> Self {
        ConvElement {
            ctx,
            degree,
            components: BTreeMap::new(),
        }
    }

    /// Build an element from components, validating arities, degrees and the
    /// context's flavor constraint.
    pub fn from_components(
        ctx: Arc<ConvContext>,
        degree: i64,
        components: Vec<MultilinearMap>,
    ) -> Result<Self> {
        let mut out = ConvElement::zero(ctx.clone(), degree);
        for m in components {
            if m.arity() < 2 || m.arity() > ctx.arity_max() {
                return Err(Error::Invalid(format!(
                    "component arity {} outside 2..={}",
                    m.arity(),
                    ctx.arity_max()
                )));
            }
            if m.degree() != degree {
                return Err(Error::WrongElementDegree {
                    expected: degree,
                    got: m.degree(),
                });
            }
            if m.space() != ctx.space() {
                return Err(Error::SpaceMismatch("component space".into()));
            }
            if m.orientation() != ctx.orientation() {
                return Err(Error::OrientationMismatch("component orientation".into()));
            }
            ctx.component_allowed(&m)?;
            if !m.is_zero() {
                out.components.insert(m.arity(), m);
            }
        }
        Ok(out)
    }

    pub(crate) fn from_components_unchecked(
        ctx: Arc<ConvContext>,
        degree: i64,
        components: BTreeMap<usize, MultilinearMap>,
    ) -> Self {
        let components = components.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        ConvElement {
            ctx,
            degree,
            components,
        }
    }

    pub fn context(&self) -> &Arc<ConvContext> {
        &self.ctx
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn components(&self) -> &BTreeMap<usize, MultilinearMap> {
        &self.components
    }

    pub fn component(&self, arity: usize) -> Option<&MultilinearMap> {
        self.components.get(&arity)
    }

    /// The component at the given arity, materializing zero when absent.
    pub fn component_or_zero(&self, arity: usize) -> MultilinearMap {
        self.components.get(&arity).cloned().unwrap_or_else(|| {
            MultilinearMap::zero(
                self.ctx.space().clone(),
                arity,
                self.degree,
                self.ctx.orientation(),
            )
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn min_arity(&self) -> Option<usize> {
        self.components.keys().next().copied()
    }

    pub fn expect_context(&self, ctx: &Arc<ConvContext>) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, ctx) || *self.ctx == **ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch(
                "element belongs to a different convolution context".into(),
            ))
        }
    }

    /// Reinterpret this element in another context over the same space,
    /// orientation and truncation (e.g. the inclusion of a C-infinity complex
    /// into the ambient A-infinity complex, or moving into a twisted
    /// complex). The target flavor constraint is enforced; the target's
    /// differential takes over.
    pub fn into_context(&self, ctx: &Arc<ConvContext>) -> Result<ConvElement> {
        if ctx.space() != self.ctx.space()
            || ctx.orientation() != self.ctx.orientation()
            || ctx.arity_max() != self.ctx.arity_max()
        {
            return Err(Error::ContextMismatch(
                "target context differs in space, orientation or truncation".into(),
            ));
        }
        for m in self.components.values() {
            ctx.component_allowed(m)?;
        }
        Ok(ConvElement {
            ctx: ctx.clone(),
            degree: self.degree,
            components: self.components.clone(),
        })
    }

    /// Forget flavor constraints: view in the ambient associative-flavored
    /// context.
    pub fn into_ambient(&self) -> Result<ConvElement> {
        let ambient = self.ctx.with_flavor(self.ctx.flavor().associative_envelope())?;
        Ok(ConvElement {
            ctx: ambient,
            degree: self.degree,
            components: self.components.clone(),
        })
    }

    pub fn add(&self, other: &ConvElement) -> Result<ConvElement> {
        other.expect_context(&self.ctx)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "adding elements of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let mut components = self.components.clone();
        for (n, m) in &other.components {
            let merged = match components.remove(n) {
                Some(cur) => cur.add(m)?,
                None => m.clone(),
            };
            if !merged.is_zero() {
                components.insert(*n, merged);
            }
        }
        Ok(ConvElement {
            ctx: self.ctx.clone(),
            degree: self.degree,
            components,
        })
    }

    pub fn scale(&self, c: &Q) -> ConvElement {
        if c.is_zero() {
            return ConvElement::zero(self.ctx.clone(), self.degree);
        }
        ConvElement {
            ctx: self.ctx.clone(),
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(n, m)| (*n, m.scale(c)))
                .collect(),
        }
    }

    pub fn negate(&self) -> ConvElement {
        self.scale(&-Q::one())
    }

    pub fn sub(&self, other: &ConvElement) -> Result<ConvElement> {
        self.add(&other.negate())
    }

    /// Convolution star product; components above the truncation arity are
    /// discarded.
    pub fn star(&self, other: &ConvElement) -> Result<ConvElement> {
        other.expect_context(&self.ctx)?;
        let cap = self.ctx.arity_max();
        let mut out: BTreeMap<usize, MultilinearMap> = BTreeMap::new();
        for (p, f) in &self.components {
            for (q, g) in &other.components {
                let n = p + q - 1;
                if n > cap {
                    continue;
                }
                for i in 1..=*p {
                    let piece = f.compose_at(g, i)?;
                    let merged = match out.remove(&n) {
                        Some(cur) => cur.add(&piece)?,
                        None => piece,
                    };
                    if !merged.is_zero() {
                        out.insert(n, merged);
                    }
                }
            }
        }
        Ok(ConvElement {
            ctx: self.ctx.clone(),
            degree: self.degree + other.degree,
            components: out,
        })
    }

    /// `[f, g] = f * g - (-1)^{|f||g|} g * f`.
    pub fn bracket(&self, other: &ConvElement) -> Result<ConvElement> {
        let fg = self.star(other)?;
        let gf = other.star(self)?;
        let sign = if (self.degree * other.degree).rem_euclid(2) == 1 {
            Q::one()
        } else {
            -Q::one()
        };
        fg.add(&gf.scale(&sign))
    }

    /// Differential of the context: `d(f) = [base, f]`.
    pub fn differential(&self) -> Result<ConvElement> {
        let base = self.ctx.base_element();
        base.bracket(self)
    }

    /// `d(x) + (1/2)[x, x]` for a degree `-1` element.
    pub fn mc_defect(&self) -> Result<ConvElement> {
        if self.degree != -1 {
            return Err(Error::WrongElementDegree {
                expected: -1,
                got: self.degree,
            });
        }
        let half = Q::new(1.into(), 2.into());
        self.differential()?.add(&self.bracket(self)?.scale(&half))
    }

    pub fn is_maurer_cartan(&self) -> Result<bool> {
        Ok(self.mc_defect()?.is_zero())
    }

    /// Largest `p` with the element in `F^p` (components of arity `>= p+1`);
    /// infinite for zero.
    pub fn filtration_degree(&self) -> Filtration {
        match self.min_arity() {
            Some(n) => Filtration::Finite(n - 1),
            None => Filtration::Infinite,
        }
    }

    /// Gauge action `exp(a) . x = x - sum_{n>=0} ad_a^n / (n+1)! d_x(a)`,
    /// truncated by the arity filtration.
    pub fn gauge_act(a: &ConvElement, x: &ConvElement) -> Result<ConvElement> {
        a.expect_context(x.context())?;
        if a.degree != 0 {
            return Err(Error::WrongElementDegree {
                expected: 0,
                got: a.degree,
            });
        }
        if x.degree != -1 {
            return Err(Error::WrongElementDegree {
                expected: -1,
                got: x.degree,
            });
        }
        let defect = x.mc_defect()?;
        if !defect.is_zero() {
            return Err(Error::NotMaurerCartan(defect.min_arity().unwrap()));
        }
        // d_x(a) = d(a) + [x, a]
        let mut term = a.differential()?.add(&x.bracket(a)?)?;
        let mut result = x.clone();
        let mut factorial = Q::one();
        let mut n = 0usize;
        while !term.is_zero() {
            factorial *= Q::from_integer(((n + 1) as i64).into());
            result = result.sub(&term.scale(&(Q::one() / &factorial)))?;
            term = a.bracket(&term)?;
            n += 1;
            if n > x.context().arity_max() + 1 {
                break; // unreachable for legal inputs: ad_a raises filtration
            }
        }
        Ok(result)
    }

    /// Baker-Campbell-Hausdorff product of two degree `0` elements, truncated
    /// by the arity filtration.
    pub fn bch(a: &ConvElement, b: &ConvElement) -> Result<ConvElement> {
        a.expect_context(b.context())?;
        if a.degree != 0 || b.degree != 0 {
            return Err(Error::WrongElementDegree {
                expected: 0,
                got: if a.degree != 0 { a.degree } else { b.degree },
            });
        }
        let max_weight = a.context().arity_max() - 1;
        let table = bch_bracket_table(max_weight);
        let mut out = ConvElement::zero(a.ctx.clone(), 0);
        for weight_terms in table.iter() {
            for term in weight_terms {
                // left-nested bracket [..[[g_1, g_2], g_3]..] evaluated in
                // this Lie algebra
                let pick = |g: bch::Gen| match g {
                    bch::Gen::A => a,
                    bch::Gen::B => b,
                };
                let mut val = pick(term.word[0]).clone();
                for &g in &term.word[1..] {
                    val = val.bracket(pick(g))?;
                    if val.is_zero() {
                        break;
                    }
                }
                if !val.is_zero() {
                    out = out.add(&val.scale(&term.coeff))?;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ConvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "element of degree {} ({} arities)", self.degree, self.components.len())?;
        for (n, m) in &self.components {
            write!(f, "arity {n}: {m}")?;
        }
        Ok(())
    }
}
