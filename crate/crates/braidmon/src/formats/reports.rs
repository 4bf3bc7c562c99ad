use std::fmt::Write;

use braidmon_core::braid::canonical_form;
use braidmon_core::equivalence::{EquivalencePath, EquivalenceVerdict, Fingerprint, FingerprintField};
use braidmon_core::geometry::{CurveInvariants, IntersectionPoint, ProjPoint};
use braidmon_core::group::{FinitePresentation, FreeWord, SymmetricImage};
use braidmon_core::{BraidWord, Direction, Permutation};

use super::{invalid, FormatError};

fn at(line: usize, detail: impl std::fmt::Display) -> FormatError {
    FormatError::Line { line: line + 1, detail: detail.to_string() }
}

fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, FormatError> {
    s.trim().parse().map_err(|_| at(line, format_args!("expected a number, got {s:?}")))
}

/// Generator count on the first line, then one relator per line.
pub fn print_presentation(p: &FinitePresentation) -> String {
    p.to_string()
}

pub fn parse_presentation(text: &str) -> Result<FinitePresentation, FormatError> {
    let mut lines = text.lines().enumerate();
    let (_, head) = lines.next().ok_or_else(|| invalid("empty presentation"))?;
    let generators: usize = num(0, head)?;
    let relators = lines.map(|(k, l)| FreeWord::parse(l).map_err(|e| at(k, e))).collect::<Result<Vec<_>, _>>()?;
    Ok(FinitePresentation::new(generators, relators)?)
}

/// One homomorphism per line: the generator images in cycle notation.
pub fn print_homs(homs: &[SymmetricImage]) -> String {
    let mut out = String::new();
    for h in homs {
        let images: Vec<String> = h.images.iter().map(Permutation::to_string).collect();
        writeln!(out, "{}", images.join(" ")).unwrap();
    }
    out
}

pub fn parse_homs(text: &str, degree: usize) -> Result<Vec<Vec<Permutation>>, FormatError> {
    text.lines()
        .enumerate()
        .map(|(k, l)| {
            l.split_whitespace().map(|c| Permutation::parse_cycles(c, degree).map_err(|e| at(k, e))).collect()
        })
        .collect()
}

const FIELDS: [&str; 7] =
    ["strands", "factor_count", "exponent_sum", "s_multiset", "factor_exponents", "cycle_types", "conjugacy_keys"];

pub fn print_fingerprint(fp: &Fingerprint) -> String {
    let mut out = String::new();
    writeln!(out, "strands={}", fp.strands).unwrap();
    for field in [
        FingerprintField::FactorCount,
        FingerprintField::ExponentSum,
        FingerprintField::SMultiset,
        FingerprintField::FactorExponents,
        FingerprintField::CycleTypes,
        FingerprintField::ConjugacyKeys,
    ] {
        writeln!(out, "{}={}", field, fp.render(field)).unwrap();
    }
    out
}

fn key_value(k: usize, line: &str) -> Result<(&str, &str), FormatError> {
    line.split_once('=').ok_or_else(|| at(k, format_args!("expected key=value, got {line:?}")))
}

fn numbers<T: std::str::FromStr>(k: usize, s: &str) -> Result<Vec<T>, FormatError> {
    s.split_whitespace().map(|t| num(k, t)).collect()
}

pub fn parse_fingerprint(text: &str) -> Result<Fingerprint, FormatError> {
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() != FIELDS.len() {
        return Err(invalid(format!("expected {} lines, got {}", FIELDS.len(), lines.len())));
    }
    let mut values = Vec::new();
    for (k, (line, want)) in lines.iter().zip(FIELDS).enumerate() {
        let (key, value) = key_value(k, line)?;
        if key != want {
            return Err(at(k, format_args!("expected {want}, got {key}")));
        }
        values.push((k, value));
    }
    let strands: usize = num(0, values[0].1)?;
    let s_multiset = match values[3].1 {
        "none" => None,
        v => Some(numbers(3, v)?),
    };
    let cycle_types = match values[5].1 {
        "" => Vec::new(),
        v => v
            .split(';')
            .map(|t| match t {
                "-" => Ok(Vec::new()),
                t => t.split(',').map(|x| num(5, x)).collect(),
            })
            .collect::<Result<_, _>>()?,
    };
    let conjugacy_keys = match values[6].1 {
        "none" => None,
        "" => Some(Vec::new()),
        v => Some(
            v.split(';')
                .map(|t| match t {
                    "unknown" => Ok(None),
                    t => {
                        let w = t
                            .strip_prefix('[')
                            .and_then(|t| t.strip_suffix(']'))
                            .ok_or_else(|| at(6, format_args!("bad key {t:?}")))?;
                        Ok(Some(canonical_form(&BraidWord::parse(strands, w)?)))
                    }
                })
                .collect::<Result<_, FormatError>>()?,
        ),
    };
    Ok(Fingerprint {
        strands,
        factor_count: num(1, values[1].1)?,
        exponent_sum: num(2, values[2].1)?,
        s_multiset,
        factor_exponents: numbers(4, values[4].1)?,
        cycle_types,
        conjugacy_keys,
    })
}

/// `outcome=…` followed by the path (`move=i dir` lines and `conjugator=`),
/// the distinguishing field with both values, or the search statistics.
pub fn print_verdict(v: &EquivalenceVerdict) -> String {
    let mut out = String::new();
    match v {
        EquivalenceVerdict::Equivalent(path) => {
            writeln!(out, "outcome=equivalent").unwrap();
            for (i, dir) in &path.moves {
                writeln!(out, "move={i} {dir}").unwrap();
            }
            writeln!(out, "conjugator={}", path.conjugator).unwrap();
        }
        EquivalenceVerdict::Distinguished { field, left, right } => {
            writeln!(out, "outcome=distinguished\nfield={field}\nleft={left}\nright={right}").unwrap();
        }
        EquivalenceVerdict::Inconclusive { states_visited, states_pruned, conjugators } => {
            writeln!(
                out,
                "outcome=inconclusive\nstates_visited={states_visited}\nstates_pruned={states_pruned}\nconjugators={conjugators}"
            )
            .unwrap();
        }
    }
    out
}

pub fn parse_verdict(text: &str, strands: usize) -> Result<EquivalenceVerdict, FormatError> {
    let pairs: Vec<(usize, &str, &str)> =
        text.lines().enumerate().map(|(k, l)| key_value(k, l).map(|(a, b)| (k, a, b))).collect::<Result<_, _>>()?;
    let expect = |idx: usize, key: &str| -> Result<(usize, &str), FormatError> {
        match pairs.get(idx) {
            Some(&(k, got, v)) if got == key => Ok((k, v)),
            Some(&(k, got, _)) => Err(at(k, format_args!("expected {key}, got {got}"))),
            None => Err(invalid(format!("missing {key}"))),
        }
    };
    let (_, outcome) = expect(0, "outcome")?;
    let (verdict, used) = match outcome {
        "equivalent" => {
            let mut moves = Vec::new();
            let mut idx = 1;
            while let Some(&(k, "move", v)) = pairs.get(idx) {
                let (i, dir) = v.split_once(' ').ok_or_else(|| at(k, "expected \"move=i left|right\""))?;
                moves.push((num(k, i)?, dir.parse::<Direction>().map_err(|e| at(k, e))?));
                idx += 1;
            }
            let (k, z) = expect(idx, "conjugator")?;
            let conjugator = BraidWord::parse(strands, z).map_err(|e| at(k, e))?;
            (EquivalenceVerdict::Equivalent(EquivalencePath { moves, conjugator }), idx + 1)
        }
        "distinguished" => {
            let (k, f) = expect(1, "field")?;
            let field = FingerprintField::from_name(f).ok_or_else(|| at(k, format_args!("unknown field {f}")))?;
            let left = expect(2, "left")?.1.to_string();
            let right = expect(3, "right")?.1.to_string();
            (EquivalenceVerdict::Distinguished { field, left, right }, 4)
        }
        "inconclusive" => {
            let (k1, a) = expect(1, "states_visited")?;
            let (k2, b) = expect(2, "states_pruned")?;
            let (k3, c) = expect(3, "conjugators")?;
            let v = EquivalenceVerdict::Inconclusive {
                states_visited: num(k1, a)?,
                states_pruned: num(k2, b)?,
                conjugators: num(k3, c)?,
            };
            (v, 4)
        }
        other => return Err(at(0, format_args!("unknown outcome {other}"))),
    };
    if let Some(&(k, key, _)) = pairs.get(used) {
        return Err(at(k, format_args!("unexpected {key}")));
    }
    Ok(verdict)
}

/// `m deg_f d g kappa n1 delta`, tab separated; `-` marks an absent `m` or `deg_f`.
pub fn print_invariants(inv: &CurveInvariants) -> String {
    let opt = |x: &Option<_>| x.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
    format!("{}\t{}\t{}\t{}\t{}\t{}\t{}\n", opt(&inv.m), opt(&inv.deg_f), inv.d, inv.g, inv.kappa, inv.n1, inv.delta)
}

pub fn parse_invariants(text: &str) -> Result<CurveInvariants, FormatError> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 7 || line.contains('\n') {
        return Err(at(0, "expected one line of 7 tab-separated fields"));
    }
    let opt = |s: &str| if s == "-" { Ok(None) } else { num(0, s).map(Some) };
    Ok(CurveInvariants {
        m: opt(cols[0])?,
        deg_f: opt(cols[1])?,
        d: num(0, cols[2])?,
        g: num(0, cols[3])?,
        kappa: num(0, cols[4])?,
        n1: num(0, cols[5])?,
        delta: num(0, cols[6])?,
    })
}

/// One point per line: `x:y:z mult=k`.
pub fn print_arrangement(points: &[IntersectionPoint]) -> String {
    let mut out = String::new();
    for p in points {
        writeln!(out, "{} mult={}", p.point, p.multiplicity()).unwrap();
    }
    out
}

pub fn parse_arrangement(text: &str) -> Result<Vec<(ProjPoint, usize)>, FormatError> {
    text.lines()
        .enumerate()
        .map(|(k, l)| {
            let (p, m) = l.split_once(" mult=").ok_or_else(|| at(k, "expected \"x:y:z mult=k\""))?;
            Ok((p.parse().map_err(|e| at(k, e))?, num(k, m)?))
        })
        .collect()
}
