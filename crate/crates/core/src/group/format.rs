//! Text, JSON and computer-algebra exports of presentations, with readers
//! for each.
//!
//! Plain text:
//!
//! ```text
//! generators: rho_1, rho_2
//! relator: rho_1 rho_2 rho_1^-1 rho_2^-1
//! ```
//!
//! The empty word is spelled `1`.

use serde::{Deserialize, Serialize};

use crate::error::WordError;
use crate::group::presentation::Presentation;
use crate::group::word::{GenId, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Cas,
}

pub fn write(p: &Presentation, format: Format) -> String {
    match format {
        Format::Plain => to_plain(p),
        Format::Json => to_json(p),
        Format::Cas => to_cas(p),
    }
}

pub fn read(text: &str, format: Format) -> Result<Presentation, WordError> {
    match format {
        Format::Plain => from_plain(text),
        Format::Json => from_json(text),
        Format::Cas => from_cas(text),
    }
}

pub fn to_plain(p: &Presentation) -> String {
    let mut out = String::from("generators:");
    if !p.generators().is_empty() {
        out.push(' ');
        out.push_str(&join(p.generators().iter().map(|g| g.to_string()), ", "));
    }
    out.push('\n');
    for r in p.relators() {
        out.push_str(&format!("relator: {r}\n"));
    }
    out
}

fn join<I: Iterator<Item = String>>(items: I, sep: &str) -> String {
    items.collect::<Vec<_>>().join(sep)
}

/// Parses juxtaposed factors `g`, `g^-1` or `g^n`; `1` is the identity.
pub fn parse_word(text: &str, p: &Presentation) -> Result<Word, WordError> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        if token == "1" {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            Some((name, e)) => {
                let e: i32 = e.parse().map_err(|_| WordError::Parse(format!("bad exponent in `{token}`")))?;
                (name, e)
            }
            None => (token, 1),
        };
        let g = p.generator(name)?;
        let letter = if exp < 0 { Letter::neg(&g) } else { Letter::pos(&g) };
        letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
    }
    Ok(Word::reduce(letters))
}

pub fn from_plain(text: &str) -> Result<Presentation, WordError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| WordError::Parse("empty input".into()))?;
    let names = header
        .strip_prefix("generators:")
        .ok_or_else(|| WordError::Parse(format!("expected `generators:` line, got `{header}`")))?;
    let gens = names
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(GenId::new)
        .collect::<Result<Vec<_>, _>>()?;
    let base = Presentation::new(gens, Vec::new())?;
    let mut relators = Vec::new();
    for line in lines {
        let body = line
            .strip_prefix("relator:")
            .ok_or_else(|| WordError::Parse(format!("expected `relator:` line, got `{line}`")))?;
        relators.push(parse_word(body, &base)?);
    }
    base.with_relators(relators)
}

#[derive(Serialize, Deserialize)]
struct JsonPresentation {
    generators: Vec<String>,
    relators: Vec<Vec<(String, i32)>>,
}

pub fn to_json(p: &Presentation) -> String {
    let doc = JsonPresentation {
        generators: p.generators().iter().map(|g| g.to_string()).collect(),
        relators: p
            .relators()
            .iter()
            .map(|r| r.letters().iter().map(|l| (l.gen().to_string(), l.exponent())).collect())
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("presentation serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Presentation, WordError> {
    let doc: JsonPresentation = serde_json::from_str(text).map_err(|e| WordError::Parse(e.to_string()))?;
    let gens = doc.generators.iter().map(|n| GenId::new(n)).collect::<Result<Vec<_>, _>>()?;
    let base = Presentation::new(gens, Vec::new())?;
    let mut relators = Vec::new();
    for r in doc.relators {
        let mut letters = Vec::with_capacity(r.len());
        for (name, exp) in r {
            letters.push(Letter::new(base.generator(&name)?, exp)?);
        }
        relators.push(base.word(letters)?);
    }
    base.with_relators(relators)
}

/// A finitely presented group script in GAP syntax.
pub fn to_cas(p: &Presentation) -> String {
    let mut out = String::new();
    let quoted = join(p.generators().iter().map(|g| format!("\"{g}\"")), ", ");
    out.push_str(&format!("F := FreeGroup([{quoted}]);;\n"));
    for (n, g) in p.generators().iter().enumerate() {
        out.push_str(&format!("{g} := F.{};;\n", n + 1));
    }
    if p.relators().is_empty() {
        out.push_str("G := F / [ ];;\n");
        return out;
    }
    out.push_str("G := F / [\n");
    let words: Vec<String> = p.relators().iter().map(cas_word).collect();
    out.push_str(&join(words.into_iter().map(|w| format!("  {w}")), ",\n"));
    out.push_str("\n];;\n");
    out
}

fn cas_word(w: &Word) -> String {
    if w.is_identity() {
        return "One(F)".to_string();
    }
    join(
        w.letters().iter().map(|l| if l.is_inverse() { format!("{}^-1", l.gen()) } else { l.gen().to_string() }),
        "*",
    )
}

/// Reads back the scripts produced by [`to_cas`].
pub fn from_cas(text: &str) -> Result<Presentation, WordError> {
    let bad = |m: &str| WordError::Parse(format!("cas script: {m}"));
    let start = text.find("FreeGroup([").ok_or_else(|| bad("missing FreeGroup"))? + "FreeGroup([".len();
    let end = start + text[start..].find("])").ok_or_else(|| bad("unterminated generator list"))?;
    let gens = text[start..end]
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.strip_prefix('"').and_then(|s| s.strip_suffix('"')).ok_or_else(|| bad("unquoted name")).and_then(GenId::new)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let base = Presentation::new(gens, Vec::new())?;

    let rstart = text.find("F / [").ok_or_else(|| bad("missing quotient"))? + "F / [".len();
    let rend = rstart + text[rstart..].find("];;").ok_or_else(|| bad("unterminated relator list"))?;
    let mut relators = Vec::new();
    for item in text[rstart..rend].split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let mut letters = Vec::new();
        for factor in item.split('*').map(str::trim) {
            if factor == "One(F)" {
                continue;
            }
            match factor.strip_suffix("^-1") {
                Some(name) => letters.push(Letter::neg(&base.generator(name)?)),
                None => letters.push(Letter::pos(&base.generator(factor)?)),
            }
        }
        relators.push(Word::reduce(letters));
    }
    base.with_relators(relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::word::commutator;

    fn sample() -> Presentation {
        let p = Presentation::free(&["x", "rho_1"]).unwrap();
        let x = Word::gen(&p.generators()[0]);
        let r = Word::gen(&p.generators()[1]);
        p.with_relators([commutator(&x, &r), x.pow(3)]).unwrap()
    }

    #[test]
    fn plain_layout() {
        let text = to_plain(&sample());
        assert_eq!(text, "generators: x, rho_1\nrelator: x^-1 rho_1^-1 x rho_1\nrelator: x x x\n");
        assert_eq!(from_plain(&text).unwrap(), sample());
        assert_eq!(to_plain(&Presentation::free::<&str>(&[]).unwrap()), "generators:\n");
    }

    #[test]
    fn plain_reader_accepts_powers_and_identity() {
        let p = from_plain("generators: a, b\nrelator: a^2 b^-1\nrelator: 1\n").unwrap();
        assert_eq!(p.relators()[0].to_string(), "a a b^-1");
        assert!(p.relators()[1].is_identity());
        assert!(from_plain("generators: a\nrelator: b\n").is_err());
        assert!(from_plain("relator: a\n").is_err());
    }

    #[test]
    fn json_and_cas_round_trip() {
        let p = sample();
        assert_eq!(from_json(&to_json(&p)).unwrap(), p);
        assert_eq!(from_cas(&to_cas(&p)).unwrap(), p);
        let free = Presentation::free(&["a"]).unwrap();
        assert_eq!(from_cas(&to_cas(&free)).unwrap(), free);
        assert!(to_json(&p).contains("[\n        \"x\",\n        -1\n      ]"));
    }

    #[test]
    fn cas_layout() {
        let text = to_cas(&sample());
        assert_eq!(
            text,
            "F := FreeGroup([\"x\", \"rho_1\"]);;\nx := F.1;;\nrho_1 := F.2;;\nG := F / [\n  x^-1*rho_1^-1*x*rho_1,\n  x*x*x\n];;\n"
        );
    }
}
