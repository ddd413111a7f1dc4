//! On-disk cache of the enumerated Weyl group and of reduced words of the reflections.
//!
//! One text file per system, `<type><rank>.v1.txt`:
//!
//! ```text
//! schubaut-cache 1
//! system B2
//! sha256 <hex digest of everything after the blank line>
//!
//! group 8
//! e
//! 1
//! ...
//! reflections 4
//! 1
//! ...
//! ```
//!
//! Words are 1-based labels. A file that fails to parse, has the wrong digest or
//! decodes to inconsistent data is rebuilt and rewritten without comment.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use schubaut::weyl::enumerate_group;
use schubaut::{Result, RootSystem, WeylElement};
use sha2::{Digest, Sha256};

const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "schubaut-cache";

pub struct GroupCache {
    pub group: Vec<WeylElement>,
    pub reflections: Vec<WeylElement>,
}

pub fn cache_path(dir: &Path, rs: &RootSystem) -> PathBuf {
    dir.join(format!("{}.v{FORMAT_VERSION}.txt", rs.name()))
}

fn word_text(w: &WeylElement) -> String {
    if w.is_identity() {
        "e".into()
    } else {
        w.labels().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

fn encode_body(cache: &GroupCache) -> String {
    let mut body = format!("group {}\n", cache.group.len());
    for w in &cache.group {
        body.push_str(&word_text(w));
        body.push('\n');
    }
    body.push_str(&format!("reflections {}\n", cache.reflections.len()));
    for r in &cache.reflections {
        body.push_str(&word_text(r));
        body.push('\n');
    }
    body
}

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub fn encode(rs: &RootSystem, cache: &GroupCache) -> String {
    let body = encode_body(cache);
    format!("{MAGIC} {FORMAT_VERSION}\nsystem {}\nsha256 {}\n\n{body}", rs.name(), digest(&body))
}

fn parse_word(rs: &RootSystem, line: &str) -> Option<WeylElement> {
    if line == "e" {
        return Some(WeylElement::identity(rs));
    }
    let labels = line.split(',').map(|t| t.parse().ok()).collect::<Option<Vec<usize>>>()?;
    let w = WeylElement::from_labels(rs, &labels).ok()?;
    // stored words are canonical reduced words
    (w.labels() == labels).then_some(w)
}

fn section<'a>(lines: &mut impl Iterator<Item = &'a str>, name: &str, rs: &RootSystem) -> Option<Vec<WeylElement>> {
    let count: usize = lines.next()?.strip_prefix(name)?.trim().parse().ok()?;
    (0..count).map(|_| parse_word(rs, lines.next()?)).collect()
}

/// Decodes a cache file, returning `None` on any inconsistency.
pub fn decode(rs: &RootSystem, text: &str) -> Option<GroupCache> {
    let (header, body) = text.split_once("\n\n")?;
    let mut head = header.lines();
    if head.next()? != format!("{MAGIC} {FORMAT_VERSION}") {
        return None;
    }
    if head.next()?.strip_prefix("system ")? != rs.name() {
        return None;
    }
    if head.next()?.strip_prefix("sha256 ")? != digest(body) {
        return None;
    }
    let mut lines = body.lines();
    let group = section(&mut lines, "group ", rs)?;
    let reflections = section(&mut lines, "reflections ", rs)?;
    if lines.next().is_some() || reflections.len() != rs.num_positive() {
        return None;
    }
    // the k-th stored reflection must send the k-th positive root to its negative
    for (k, r) in reflections.iter().enumerate() {
        if r.apply_index(k) != rs.negate_index(k) {
            return None;
        }
    }
    Some(GroupCache { group, reflections })
}

pub fn build(rs: &RootSystem, cap: usize) -> Result<GroupCache> {
    Ok(GroupCache {
        group: enumerate_group(rs, cap)?,
        reflections: rs.reflections().to_vec(),
    })
}

/// Loads the cache for `rs` from `dir`, rebuilding and rewriting it if missing or damaged.
pub fn load_or_build(dir: &Path, rs: &RootSystem, cap: usize) -> anyhow::Result<GroupCache> {
    let path = cache_path(dir, rs);
    match fs::read_to_string(&path) {
        Ok(text) => {
            if let Some(cache) = decode(rs, &text) {
                if cache.group.len() <= cap {
                    return Ok(cache);
                }
            }
        }
        Err(e) if e.kind() == io::ErrorKind::NotFound => {}
        Err(e) => return Err(e.into()),
    }
    let cache = build(rs, cap)?;
    fs::create_dir_all(dir)?;
    // write then rename so a concurrent reader never sees a torn file
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, encode(rs, &cache))?;
    fs::rename(&tmp, &path)?;
    Ok(cache)
}

#[cfg(test)]
mod tests {
    use super::*;
    use schubaut::weyl::DEFAULT_CAP;
    use schubaut::TypeLetter;

    #[test]
    fn round_trip() {
        let rs = RootSystem::build(TypeLetter::B, 3).unwrap();
        let cache = build(&rs, DEFAULT_CAP).unwrap();
        let text = encode(&rs, &cache);
        let back = decode(&rs, &text).unwrap();
        assert_eq!(back.group, cache.group);
        assert_eq!(back.reflections, cache.reflections);
    }

    #[test]
    fn rejects_tampering() {
        let rs = RootSystem::build(TypeLetter::A, 2).unwrap();
        let text = encode(&rs, &build(&rs, DEFAULT_CAP).unwrap());
        assert!(decode(&rs, &text.replacen("\n1,2\n", "\n2,1\n", 1)).is_none());
        let other = RootSystem::build(TypeLetter::A, 3).unwrap();
        assert!(decode(&other, &text).is_none());
        assert!(decode(&rs, &text[..text.len() - 3]).is_none());
    }

    #[test]
    fn non_reduced_words_rejected() {
        let rs = RootSystem::build(TypeLetter::A, 2).unwrap();
        assert!(parse_word(&rs, "1,1").is_none());
        assert!(parse_word(&rs, "2,1").is_some());
    }
}
