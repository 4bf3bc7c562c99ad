use serde::{Deserialize, Serialize};

use braidmon_core::factorization::{Factors, Target};
use braidmon_core::{BraidWord, CuspidalFactor, Factorization};

use super::{invalid, FormatError};

const FULL_TWIST: &str = "full_twist";

/// On-disk shape. `rho` is the conjugator, acting on the left:
/// the factor is `rho⁻¹ X_1^s rho`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    strands: usize,
    #[serde(default = "full_twist")]
    target: String,
    #[serde(default)]
    factors: Vec<FactorRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorRepr {
    #[serde(skip_serializing_if = "Option::is_none")]
    rho: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<String>,
}

fn full_twist() -> String {
    FULL_TWIST.into()
}

/// Parses a factorization file:
///
/// ```toml
/// strands = 2
/// target = "full_twist"   # or a braid word such as "1 1"
///
/// [[factors]]
/// rho = ""
/// s = 1
///
/// [[factors]]
/// word = "1"
/// ```
///
/// Factors are either all `{rho, s}` or all `{word}`.
pub fn parse_factorization(text: &str) -> Result<Factorization, FormatError> {
    let repr: FileRepr = toml::from_str(text)?;
    let d = repr.strands;
    let target = match repr.target.trim() {
        FULL_TWIST => Target::FullTwist,
        w => Target::Word(BraidWord::parse(d, w)?),
    };
    let cuspidal = repr.factors.iter().all(|f| f.word.is_none());
    let mut cusp = Vec::new();
    let mut general = Vec::new();
    for (k, f) in repr.factors.iter().enumerate() {
        match (&f.rho, f.s, &f.word) {
            (Some(rho), Some(s), None) if cuspidal => {
                cusp.push(CuspidalFactor::new(BraidWord::parse(d, rho)?, s)?);
            }
            (None, None, Some(w)) if !cuspidal => general.push(BraidWord::parse(d, w)?),
            _ => {
                return Err(invalid(format!(
                    "factor {}: expected either rho and s, or word, consistently across factors",
                    k + 1
                )))
            }
        }
    }
    let factors = if cuspidal { Factors::Cuspidal(cusp) } else { Factors::General(general) };
    Ok(Factorization::new(d, factors, target)?)
}

pub fn print_factorization(f: &Factorization) -> String {
    let factors = match f.factors() {
        Factors::Cuspidal(fs) => fs
            .iter()
            .map(|c| FactorRepr { rho: Some(c.rho().to_string()), s: Some(c.s().into()), word: None })
            .collect(),
        Factors::General(ws) => {
            ws.iter().map(|w| FactorRepr { rho: None, s: None, word: Some(w.to_string()) }).collect()
        }
    };
    let target = match f.target() {
        Target::FullTwist => full_twist(),
        Target::Word(w) => w.to_string(),
    };
    let repr = FileRepr { strands: f.strands(), target, factors };
    toml::to_string(&repr).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const CONIC: &str =
        "strands = 2\ntarget = \"full_twist\"\n\n[[factors]]\nrho = \"\"\ns = 1\n\n[[factors]]\nrho = \"\"\ns = 1\n";

    #[test]
    fn conic_round_trip() {
        let f = parse_factorization(CONIC).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.validate().is_valid());
        assert_eq!(print_factorization(&f), CONIC);
    }

    #[test]
    fn general_factors_and_word_target() {
        let text = "strands = 3\ntarget = \"1 2\"\n\n[[factors]]\nword = \"1\"\n\n[[factors]]\nword = \"2\"\n";
        let f = parse_factorization(text).unwrap();
        assert!(!f.is_cuspidal());
        assert!(f.validate().product_ok);
        assert_eq!(print_factorization(&f), text);
    }

    #[test]
    fn rejects_bad_input() {
        let bad_s = CONIC.replacen("s = 1", "s = 4", 1);
        assert!(matches!(parse_factorization(&bad_s), Err(FormatError::Core(braidmon_core::Error::BadExponent(4)))));
        let mixed = "strands = 2\n[[factors]]\nrho = \"\"\ns = 1\n[[factors]]\nword = \"1\"\n";
        assert!(matches!(parse_factorization(mixed), Err(FormatError::Invalid(_))));
        let half = "strands = 2\n[[factors]]\nrho = \"\"\n";
        assert!(parse_factorization(half).is_err());
        let extra = "strands = 2\ncolour = 1\n";
        assert!(matches!(parse_factorization(extra), Err(FormatError::Toml(_))));
        let range = "strands = 2\n[[factors]]\nrho = \"2\"\ns = 1\n";
        assert!(parse_factorization(range).is_err());
    }
}
