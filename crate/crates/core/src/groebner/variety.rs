use std::fmt::Write as _;

use super::{buchberger_with_budget, ideal_dimension, GroebnerError, MonomialOrder, DEFAULT_PAIR_BUDGET};
use crate::field::Scalar;
use crate::poly::{parse_poly, MultiPoly};

/// Ambient space of a variety. Projective `P^n` uses variables
/// `x0..xn`; affine `A^n` uses `x1..xn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Projective(usize),
    Affine(usize),
}

impl Ambient {
    pub fn n(self) -> usize {
        match self {
            Ambient::Projective(n) | Ambient::Affine(n) => n,
        }
    }

    pub fn num_vars(self) -> usize {
        match self {
            Ambient::Projective(n) => n + 1,
            Ambient::Affine(n) => n,
        }
    }

    /// Index of the first variable name in text syntax.
    pub fn first_index(self) -> usize {
        match self {
            Ambient::Projective(_) => 0,
            Ambient::Affine(_) => 1,
        }
    }

    pub fn is_projective(self) -> bool {
        matches!(self, Ambient::Projective(_))
    }
}

/// One component of a variety, with its claimed dimension and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub generators: Vec<MultiPoly>,
    pub claimed_dim: i64,
    pub claimed_degree: u64,
    /// Optional sample points, in ambient coordinates.
    pub points: Vec<Vec<Scalar>>,
}

impl Component {
    pub fn new(generators: Vec<MultiPoly>, claimed_dim: i64, claimed_degree: u64) -> Self {
        Component { generators, claimed_dim, claimed_degree, points: Vec::new() }
    }

    pub fn with_points(mut self, points: Vec<Vec<Scalar>>) -> Self {
        self.points = points;
        self
    }

    /// Whether every generator has degree at most one.
    pub fn is_linear(&self) -> bool {
        self.generators.iter().all(|g| g.total_degree().unwrap_or(0) <= 1)
    }
}

/// A variety given by an explicit component list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietySpec {
    name: String,
    ambient: Ambient,
    prime: u64,
    components: Vec<Component>,
    total_degree: u64,
    curve: Option<usize>,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, GroebnerError> {
    Err(GroebnerError::InvalidVariety(msg.into()))
}

impl VarietySpec {
    /// Validates variable counts, homogeneity (projective case) and sample
    /// points. The claimed total degree defaults to the sum of component
    /// degrees.
    pub fn new(ambient: Ambient, prime: u64, components: Vec<Component>) -> Result<Self, GroebnerError> {
        let nv = ambient.num_vars();
        for (ci, c) in components.iter().enumerate() {
            if c.claimed_dim < -1 || c.claimed_dim > ambient.n() as i64 {
                return invalid(format!("component {ci}: dimension {} out of range", c.claimed_dim));
            }
            for g in &c.generators {
                if g.num_vars() != nv || g.prime() != prime {
                    return Err(GroebnerError::NumVarsMismatch { expected: nv, found: g.num_vars() });
                }
                if ambient.is_projective() && !g.is_homogeneous() {
                    return invalid(format!("component {ci}: generator {} is not homogeneous", g.to_text(0)));
                }
            }
            for pt in &c.points {
                if pt.len() != nv {
                    return invalid(format!("component {ci}: point has {} coordinates, expected {nv}", pt.len()));
                }
                if ambient.is_projective() && pt.iter().all(|x| x.is_zero()) {
                    return invalid(format!("component {ci}: zero is not a projective point"));
                }
                if c.generators.iter().any(|g| !g.eval(pt).is_zero()) {
                    return invalid(format!("component {ci}: sample point does not lie on the component"));
                }
            }
        }
        let total_degree = components.iter().map(|c| c.claimed_degree).sum();
        Ok(VarietySpec { name: String::new(), ambient, prime, components, total_degree, curve: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Raises the claimed total degree; it may not drop below the sum of
    /// component degrees.
    pub fn with_total_degree(mut self, d: u64) -> Result<Self, GroebnerError> {
        let sum: u64 = self.components.iter().map(|c| c.claimed_degree).sum();
        if d < sum {
            return invalid(format!("total degree {d} below component degree sum {sum}"));
        }
        self.total_degree = d;
        Ok(self)
    }

    /// The rational normal curve `[1 : t : ... : t^n]` in `P^n`, cut out by
    /// the 2×2 minors of `[[x0 .. x(n-1)], [x1 .. xn]]`.
    pub fn rational_normal_curve(n: usize, prime: u64) -> Self {
        assert!(n >= 2, "rational normal curve needs n >= 2");
        let x = |i| MultiPoly::var(i, n + 1, prime);
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                gens.push(x(i).mul(&x(j + 1)).sub(&x(i + 1).mul(&x(j))));
            }
        }
        let mut points: Vec<Vec<Scalar>> =
            (0..2u64).map(|t| (0..=n as u64).map(|e| Scalar::new(t, prime).pow(e)).collect()).collect();
        let mut inf = vec![Scalar::zero(prime); n + 1];
        inf[n] = Scalar::one(prime);
        points.push(inf);
        let comp = Component::new(gens, 1, n as u64).with_points(points);
        let mut v = Self::new(Ambient::Projective(n), prime, vec![comp]).expect("well-formed curve");
        v.name = format!("rational-normal-curve-{n}");
        v.curve = Some(n);
        v
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn total_degree(&self) -> u64 {
        self.total_degree
    }

    /// `Some(n)` when this is the rational normal curve of degree `n`, so
    /// that the parametrization `(1, t, ..., t^n)` is available.
    pub fn curve_degree(&self) -> Option<usize> {
        self.curve
    }

    pub fn is_linear(&self) -> bool {
        self.components.iter().all(Component::is_linear)
    }

    /// Generators of the union: all products taking one generator from each
    /// component. This has the same zero set as the union.
    pub fn generators(&self) -> Vec<MultiPoly> {
        let nv = self.ambient.num_vars();
        let mut acc = vec![MultiPoly::constant(Scalar::one(self.prime), nv)];
        for c in &self.components {
            acc = acc.iter().flat_map(|a| c.generators.iter().map(move |g| a.mul(g))).collect();
        }
        if self.components.is_empty() {
            acc
        } else {
            acc.into_iter().filter(|g| !g.is_zero()).collect()
        }
    }

    /// Actual dimension of component `i` (projective dimension in the
    /// projective case), from a Gröbner basis.
    pub fn component_dimension(&self, i: usize, budget: usize) -> Result<i64, GroebnerError> {
        let c = &self.components[i];
        let g =
            buchberger_with_budget(self.ambient.num_vars(), self.prime, &c.generators, MonomialOrder::GrevLex, budget)?;
        let d = ideal_dimension(&g);
        Ok(match self.ambient {
            Ambient::Projective(_) if d <= 0 => -1,
            Ambient::Projective(_) => d - 1,
            Ambient::Affine(_) => d,
        })
    }

    /// Checks every claimed component dimension against the ideal.
    pub fn claims_hold(&self) -> Result<bool, GroebnerError> {
        for (i, c) in self.components.iter().enumerate() {
            if self.component_dimension(i, DEFAULT_PAIR_BUDGET)? != c.claimed_dim {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Recognizes the rational normal curve by comparing reduced bases.
    fn detect_curve(&mut self) {
        let n = self.ambient.n();
        if !self.ambient.is_projective() || n < 2 || self.components.len() != 1 {
            return;
        }
        let c = &self.components[0];
        if c.claimed_dim != 1 || c.claimed_degree != n as u64 || c.generators.is_empty() {
            return;
        }
        let reference = Self::rational_normal_curve(n, self.prime);
        let basis = |gens: &[MultiPoly]| {
            buchberger_with_budget(n + 1, self.prime, gens, MonomialOrder::GrevLex, DEFAULT_PAIR_BUDGET)
                .map(|g| g.polys().to_vec())
        };
        if let (Ok(a), Ok(b)) = (basis(&c.generators), basis(&reference.components[0].generators)) {
            if a == b {
                self.curve = Some(n);
            }
        }
    }

    /// Text form, starting with a `format=1` line.
    pub fn to_text(&self) -> String {
        let mut s = String::from("format=1\n");
        if !self.name.is_empty() {
            let _ = writeln!(s, "name {}", self.name);
        }
        let (kind, n) = match self.ambient {
            Ambient::Projective(n) => ("projective", n),
            Ambient::Affine(n) => ("affine", n),
        };
        let _ = writeln!(s, "ambient {kind} {n}");
        let _ = writeln!(s, "degree {}", self.total_degree);
        let first = self.ambient.first_index();
        for c in &self.components {
            let _ = writeln!(s, "component dim={} deg={}", c.claimed_dim, c.claimed_degree);
            for g in &c.generators {
                let _ = writeln!(s, "{}", g.to_text(first));
            }
            for p in &c.points {
                let coords: Vec<String> = p.iter().map(|x| x.value().to_string()).collect();
                let _ = writeln!(s, "point {}", coords.join(" "));
            }
        }
        s
    }
}

fn parse_kv(tok: &str, key: &str, line: usize) -> Result<i64, GroebnerError> {
    tok.strip_prefix(key)
        .and_then(|v| v.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| GroebnerError::InvalidVariety(format!("line {line}: expected {key}=<integer>, got {tok:?}")))
}

/// Parses the variety text format over `F_prime`. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_variety(text: &str, prime: u64) -> Result<VarietySpec, GroebnerError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, "format=1")) => {}
        Some((ln, l)) => return invalid(format!("line {ln}: expected format=1, got {l:?}")),
        None => return invalid("empty input"),
    }
    let mut name = String::new();
    let mut ambient = None;
    let mut degree = None;
    let mut components: Vec<Component> = Vec::new();
    for (ln, l) in lines {
        let mut words = l.split_whitespace();
        let head = words.next().unwrap_or("");
        match head {
            "name" => name = words.collect::<Vec<_>>().join(" "),
            "ambient" => {
                if ambient.is_some() || !components.is_empty() {
                    return invalid(format!("line {ln}: ambient must appear once, before components"));
                }
                let kind = words.next();
                let n = words.next().and_then(|w| w.parse::<usize>().ok());
                ambient = match (kind, n) {
                    (Some("projective"), Some(n)) => Some(Ambient::Projective(n)),
                    (Some("affine"), Some(n)) if n >= 1 => Some(Ambient::Affine(n)),
                    _ => return invalid(format!("line {ln}: expected 'ambient projective|affine <n>'")),
                };
            }
            "degree" => {
                degree = Some(
                    words
                        .next()
                        .and_then(|w| w.parse::<u64>().ok())
                        .ok_or_else(|| GroebnerError::InvalidVariety(format!("line {ln}: bad degree")))?,
                );
            }
            "component" => {
                if ambient.is_none() {
                    return invalid(format!("line {ln}: component before ambient"));
                }
                let dim = parse_kv(words.next().unwrap_or(""), "dim", ln)?;
                let deg = parse_kv(words.next().unwrap_or(""), "deg", ln)?;
                if deg < 1 {
                    return invalid(format!("line {ln}: component degree must be positive"));
                }
                components.push(Component::new(Vec::new(), dim, deg as u64));
            }
            "point" => {
                let comp = components
                    .last_mut()
                    .ok_or_else(|| GroebnerError::InvalidVariety(format!("line {ln}: point outside a component")))?;
                let coords: Result<Vec<Scalar>, _> =
                    words.map(|w| w.parse::<i64>().map(|v| Scalar::from_i64(v, prime))).collect();
                comp.points.push(
                    coords.map_err(|_| GroebnerError::InvalidVariety(format!("line {ln}: bad point coordinate")))?,
                );
            }
            _ => {
                let amb = ambient
                    .ok_or_else(|| GroebnerError::InvalidVariety(format!("line {ln}: polynomial before ambient")))?;
                let comp = components.last_mut().ok_or_else(|| {
                    GroebnerError::InvalidVariety(format!("line {ln}: polynomial outside a component"))
                })?;
                let g = parse_poly(l, amb.num_vars(), amb.first_index(), prime)
                    .map_err(|source| GroebnerError::Parse { line: ln, source })?;
                comp.generators.push(g);
            }
        }
    }
    let ambient = ambient.ok_or_else(|| GroebnerError::InvalidVariety("missing ambient line".into()))?;
    let mut v = VarietySpec::new(ambient, prime, components)?.with_name(name);
    if let Some(d) = degree {
        v = v.with_total_degree(d)?;
    }
    v.detect_curve();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUBIC: &str = "format=1
name cubic
ambient projective 3
component dim=1 deg=3
# minors, written in a different order and scaling
x1*x3 - x2^2
2*x0*x2 - 2*x1^2
x0*x3 - x1*x2
point 1 2 4 8
";

    #[test]
    fn parses_and_detects_curve() {
        let v = parse_variety(CUBIC, 101).unwrap();
        assert_eq!(v.ambient(), Ambient::Projective(3));
        assert_eq!(v.curve_degree(), Some(3));
        assert_eq!(v.total_degree(), 3);
        assert!(v.claims_hold().unwrap());
        let again = parse_variety(&v.to_text(), 101).unwrap();
        assert_eq!(again, v);
    }

    #[test]
    fn rational_normal_curves() {
        let conic = VarietySpec::rational_normal_curve(2, 101);
        assert_eq!(conic.components()[0].generators.len(), 1);
        assert_eq!(conic.components()[0].generators[0].to_text(0), "-x1^2 + x0*x2");
        let cubic = VarietySpec::rational_normal_curve(3, 101);
        assert_eq!(cubic.components()[0].generators.len(), 3);
        assert!(cubic.claims_hold().unwrap());
    }

    #[test]
    fn rejects_bad_files() {
        let bad = [
            "ambient projective 2\ncomponent dim=1 deg=1\nx0\n",
            "format=1\ncomponent dim=1 deg=1\nx0\n",
            "format=1\nambient projective 2\ncomponent dim=1 deg=2\nx0^2 + x1\n",
            "format=1\nambient affine 2\ncomponent dim=1 deg=1\nx0\n",
            "format=1\nambient affine 2\ncomponent dim=0 deg=1\nx1 - 1\nx2\npoint 2 0\n",
            "format=1\nambient projective 2\ncomponent dim=1\nx0\n",
            "format=1\nambient projective 2\ncomponent dim=1 deg=2\nx0\ndegree 1\n",
        ];
        for text in bad {
            assert!(parse_variety(text, 101).is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn union_generators_are_products() {
        let text = "format=1\nambient projective 2\ncomponent dim=0 deg=1\nx0\nx1\ncomponent dim=0 deg=1\nx2\n";
        let v = parse_variety(text, 101).unwrap();
        let gens = v.generators();
        assert_eq!(gens.len(), 2);
        assert_eq!(v.total_degree(), 2);
        assert!(v.is_linear());
        assert!(!v.claims_hold().unwrap()); // V(x2) is a line, not a point
    }
}
