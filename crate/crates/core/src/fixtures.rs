//! Built-in diagrams shipped as text files.

use crate::diagram::{parse_diagram, Diagram};
use crate::Error;

macro_rules! table {
    ($($name:literal => $file:literal),* $(,)?) => {
        const FILES: &[(&str, &str, &str)] = &[$(($name, $file, include_str!(concat!("../fixtures/", $file)))),*];
    };
}

table! {
    "trivial-theta" => "trivial-theta.th",
    "curl-theta" => "curl-theta.th",
    "clasp-theta" => "clasp-theta.th",
    "trefoil-theta" => "trefoil-theta.th",
    "kinoshita-theta" => "kinoshita-theta.th",
    "hopf" => "hopf.lk",
    "trefoil" => "trefoil.lk",
    "twist-annulus" => "twist-annulus.lk",
    "move-1-before" => "move-1-before.th",
    "move-1-after" => "move-1-after.th",
    "move-2-before" => "move-2-before.th",
    "move-2-after" => "move-2-after.th",
    "move-3-before" => "move-3-before.th",
    "move-3-after" => "move-3-after.th",
    "move-4-before" => "move-4-before.th",
    "move-4-after" => "move-4-after.th",
    "move-5-before" => "move-5-before.th",
    "move-5-after" => "move-5-after.th",
    "move-6-before" => "move-6-before.th",
    "move-6-after" => "move-6-after.th",
}

/// Names of all built-in diagrams.
pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|f| f.0)
}

/// File name under which a fixture ships.
pub fn file_name(name: &str) -> Option<&'static str> {
    FILES.iter().find(|f| f.0 == name).map(|f| f.1)
}

/// Raw text of a fixture.
pub fn text(name: &str) -> Option<&'static str> {
    FILES.iter().find(|f| f.0 == name).map(|f| f.2)
}

pub fn load(name: &str) -> Result<Diagram, Error> {
    let t = text(name).ok_or_else(|| Error::Unsupported(format!("no fixture named {name}")))?;
    parse_diagram(t)
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_fixtures_parse() {
        for name in super::names() {
            super::load(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}
