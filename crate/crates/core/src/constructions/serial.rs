//! Line-oriented text formats. Every document starts with `format=1`;
//! field elements are written as canonical residues.

use std::fmt::Write as _;

use super::{Branch, ConstructionError, Eps, FamilyParams, Kind, LinearMapSpec, Member, Subspace, SubspaceFamily};
use crate::field::Scalar;
use crate::linalg::{AffineSubspace, LinearForm, ProjSubspace};

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn vals(v: &[Scalar]) -> String {
    join(v.iter().map(|x| x.value()))
}

fn eps_text(eps: Option<Eps>) -> String {
    eps.map_or_else(|| "none".to_string(), |e| e.to_string())
}

pub(crate) fn family_to_text(f: &SubspaceFamily) -> String {
    let p = f.params();
    let mut s = String::from("format=1\n");
    let _ = writeln!(s, "construction {}", f.construction());
    let _ = writeln!(s, "field_prime {}", f.prime());
    let _ = writeln!(s, "kind {}", p.kind.as_str());
    let _ = writeln!(s, "n {}", p.n);
    let _ = writeln!(s, "d {}", p.d);
    let _ = writeln!(s, "k {}", p.k);
    let _ = writeln!(s, "eps {}", eps_text(p.eps));
    let _ = writeln!(s, "branch {}", f.branch());
    let _ = writeln!(s, "sample_base {}", f.sample_base());
    let _ = writeln!(s, "members {}", f.len());
    for (i, m) in f.members().iter().enumerate() {
        let _ = writeln!(s, "member {i}");
        let _ = writeln!(s, "index {}", join(&m.index));
        if m.degenerate {
            s.push_str("degenerate\n");
        }
        match &m.subspace {
            Subspace::Projective(h) => {
                for form in h.forms() {
                    let _ = writeln!(s, "form {}", vals(form.coeffs()));
                }
                for b in h.basis() {
                    let _ = writeln!(s, "basis {}", vals(b));
                }
            }
            Subspace::Affine(a) => {
                for form in a.affine_forms() {
                    let _ = writeln!(s, "form {}", vals(form));
                }
                let _ = writeln!(s, "point {}", vals(a.base_point()));
                for dir in a.directions() {
                    let _ = writeln!(s, "direction {}", vals(dir));
                }
            }
        }
    }
    s
}

/// Text form of a list of linear maps; `kind` says whether they act on
/// affine or projective coordinates.
pub fn maps_to_text(
    maps: &[LinearMapSpec],
    kind: Kind,
    n: usize,
    d: usize,
    r: usize,
    eps: Option<Eps>,
    prime: u64,
) -> String {
    let mut s = String::from("format=1\nconstruction noether\n");
    let _ = writeln!(s, "field_prime {prime}");
    let _ = writeln!(s, "kind {}", kind.as_str());
    let _ = writeln!(s, "n {n}");
    let _ = writeln!(s, "d {d}");
    let _ = writeln!(s, "r {r}");
    let _ = writeln!(s, "eps {}", eps_text(eps));
    let _ = writeln!(s, "maps {}", maps.len());
    for (i, m) in maps.iter().enumerate() {
        let _ = writeln!(s, "map {i}");
        let _ = writeln!(s, "index {}", join(&m.source_index));
        for row in &m.rows {
            let _ = writeln!(s, "row {}", vals(row));
        }
    }
    s
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> =
            Box::new(text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty()));
        Lines { inner: it.peekable() }
    }

    fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ConstructionError> {
        Err(ConstructionError::Parse { line, msg: msg.into() })
    }

    /// Next line, split into its keyword and the rest.
    fn next_kv(&mut self) -> Option<(usize, &'a str, &'a str)> {
        self.inner.next().map(|(ln, l)| {
            let (k, v) = l.split_once(' ').unwrap_or((l, ""));
            (ln, k, v.trim())
        })
    }

    fn peek_key(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|(_, l)| l.split_once(' ').map_or(*l, |(k, _)| k))
    }

    fn expect(&mut self, key: &str) -> Result<(usize, &'a str), ConstructionError> {
        match self.next_kv() {
            Some((ln, k, v)) if k == key => Ok((ln, v)),
            Some((ln, k, _)) => Self::err(ln, format!("expected {key:?}, found {k:?}")),
            None => Self::err(0, format!("unexpected end of input, expected {key:?}")),
        }
    }

    fn expect_num<T: std::str::FromStr>(&mut self, key: &str) -> Result<T, ConstructionError> {
        let (ln, v) = self.expect(key)?;
        v.parse().or_else(|_| Self::err(ln, format!("bad value for {key}: {v:?}")))
    }
}

fn parse_vec(ln: usize, v: &str, prime: u64, len: usize) -> Result<Vec<Scalar>, ConstructionError> {
    let out: Result<Vec<Scalar>, _> =
        v.split_whitespace().map(|w| w.parse::<u64>().map(|x| Scalar::new(x, prime))).collect();
    let out = out.or_else(|_| Lines::err(ln, "bad field element"))?;
    if out.len() != len {
        return Lines::err(ln, format!("expected {len} entries, found {}", out.len()));
    }
    if out.iter().zip(v.split_whitespace()).any(|(x, w)| x.value().to_string() != w) {
        return Lines::err(ln, "field elements must be canonical residues");
    }
    Ok(out)
}

/// Parses the family text format, re-validating every member.
pub fn parse_family(text: &str) -> Result<SubspaceFamily, ConstructionError> {
    let mut lines = Lines::new(text);
    lines.expect("format=1").or_else(|_| Lines::err(1, "expected format=1"))?;
    let (_, construction) = lines.expect("construction")?;
    let prime: u64 = lines.expect_num("field_prime")?;
    let (ln, kind) = lines.expect("kind")?;
    let kind = match kind {
        "projective" => Kind::Projective,
        "affine" => Kind::Affine,
        other => return Lines::err(ln, format!("unknown kind {other:?}")),
    };
    let n: usize = lines.expect_num("n")?;
    let d: usize = lines.expect_num("d")?;
    let k: usize = lines.expect_num("k")?;
    let (ln, eps) = lines.expect("eps")?;
    let eps = match eps {
        "none" => None,
        e => Some(super::parse_eps(e).or_else(|e| Lines::err(ln, e.to_string()))?),
    };
    let (ln, branch) = lines.expect("branch")?;
    let branch = match branch {
        "none" => Branch::None,
        "direct" => Branch::Direct,
        "reduction" => Branch::Reduction,
        other => return Lines::err(ln, format!("unknown branch {other:?}")),
    };
    let sample_base: u64 = lines.expect_num("sample_base")?;
    let count: usize = lines.expect_num("members")?;
    if prime < 2 || k >= n {
        return Lines::err(0, format!("inconsistent header: prime {prime}, n {n}, k {k}"));
    }
    let params = FamilyParams { n, d, k, eps, kind };
    let mut members = Vec::with_capacity(count);
    for i in 0..count {
        let (ln, v) = lines.expect("member")?;
        if v != i.to_string() {
            return Lines::err(ln, format!("expected member {i}"));
        }
        let (ln, idx) = lines.expect("index")?;
        let index: Vec<u64> = idx
            .split_whitespace()
            .map(|w| w.parse())
            .collect::<Result<_, _>>()
            .or_else(|_| Lines::err(ln, "bad index"))?;
        let degenerate = lines.peek_key() == Some("degenerate");
        if degenerate {
            lines.next_kv();
        }
        let mut forms = Vec::new();
        let mut basis = Vec::new();
        let mut point = None;
        let mut dirs = Vec::new();
        let mut last = ln;
        while let Some(key) = lines.peek_key() {
            if key == "member" {
                break;
            }
            let (ln, key, v) = lines.next_kv().unwrap();
            last = ln;
            match (kind, key) {
                (_, "form") => forms.push(parse_vec(ln, v, prime, n + 1)?),
                (Kind::Projective, "basis") => basis.push(parse_vec(ln, v, prime, n + 1)?),
                (Kind::Affine, "point") if point.is_none() => point = Some(parse_vec(ln, v, prime, n)?),
                (Kind::Affine, "direction") => dirs.push(parse_vec(ln, v, prime, n)?),
                _ => return Lines::err(ln, format!("unexpected {key:?} in member {i}")),
            }
        }
        let subspace = match kind {
            Kind::Projective => Subspace::Projective(
                ProjSubspace::from_parts(forms.into_iter().map(LinearForm).collect(), basis, n)
                    .or_else(|e| Lines::err(last, e.to_string()))?,
            ),
            Kind::Affine => {
                let point = point.map_or_else(|| Lines::err(last, "affine member without point"), Ok)?;
                Subspace::Affine(
                    AffineSubspace::from_parts(forms, point, dirs, n).or_else(|e| Lines::err(last, e.to_string()))?,
                )
            }
        };
        if !degenerate && subspace.dim() != k {
            return Lines::err(last, format!("member {i} has dimension {} but is not flagged", subspace.dim()));
        }
        members.push(Member { index, subspace, degenerate });
    }
    if let Some((ln, key, _)) = lines.next_kv() {
        return Lines::err(ln, format!("trailing content starting with {key:?}"));
    }
    let mut fam = SubspaceFamily::new(params, construction, prime, branch, members);
    fam.sample_base = sample_base;
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{affine_main_family, basic_family, main_family};
    use crate::field::FieldConfig;

    #[test]
    fn families_round_trip() {
        let f = FieldConfig::new(10007).unwrap();
        let fams = [
            basic_family(&FamilyParams::new(3, 2, 1).unwrap(), &f).unwrap(),
            basic_family(&FamilyParams::new(2, 1, 0).unwrap().affine(), &f).unwrap(),
            main_family(&FamilyParams::new(5, 2, 3).unwrap().with_eps(Eps::new(1, 2)).unwrap(), &f).unwrap(),
            affine_main_family(&FamilyParams::new(3, 2, 1).unwrap().with_eps(Eps::new(1, 2)).unwrap().affine(), &f)
                .unwrap(),
        ];
        for fam in fams {
            let text = fam.to_text();
            let back = parse_family(&text).unwrap();
            assert_eq!(back, fam);
            assert_eq!(back.to_text(), text);
        }
    }

    #[test]
    fn rejects_tampering() {
        let f = FieldConfig::new(101).unwrap();
        let text = basic_family(&FamilyParams::new(2, 1, 1).unwrap(), &f).unwrap().to_text();
        assert!(parse_family(&text.replacen("form 1 1 1", "form 1 1 2", 1)).is_err());
        assert!(parse_family(&text.replacen("members 3", "members 4", 1)).is_err());
        assert!(parse_family(&text.replacen("format=1", "format=2", 1)).is_err());
        assert!(parse_family(&format!("{text}junk\n")).is_err());
        assert!(parse_family(&text.replacen("form 1 1 1", "form 102 1 1", 1)).is_err());
    }
}
