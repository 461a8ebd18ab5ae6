//! The ten short exact sequences of A(1)-modules induced by the Postnikov
//! tower of `ko` and its relatives, as checkable data.
//!
//! Every entry names three cyclic modules and the images of their generators.
//! [`verify_entry`] builds the maps, checks exactness degree by degree and
//! separately counts all exact pairs by exhaustive search.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::a1algebra::{a1, parse_element, A1Element, ParseError};
use crate::a1modules::{CyclicModule, GradedA1Module};
use crate::gf2linalg::BitVec;
use crate::invariants::{poincare_series, GradedDims};
use crate::morphisms::{find_exact_pairs, ExactnessReport, ModuleMorphism, ShortExactSeq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("unrecognized module `{0}`; expected F2, A1, A1/(r1,...) with an optional `S^n ` prefix")]
    Unknown(String),
    #[error("bad suspension in `{0}`")]
    Suspension(String),
    #[error("bad relator in `{text}`: {source}")]
    Relator { text: String, source: ParseError },
}

/// `S^n A(1)/(relators)`, written in the same notation the CLI accepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    pub suspension: i32,
    pub relators: Vec<String>,
}

impl ModuleSpec {
    pub fn new(suspension: i32, relators: &[&str]) -> Self {
        Self {
            suspension,
            relators: relators.iter().map(|r| r.to_string()).collect(),
        }
    }

    pub fn f2(suspension: i32) -> Self {
        Self::new(suspension, &["Sq1", "Sq2"])
    }

    /// Parses `F2`, `A1`, `A1/(Sq1,Sq3)` and the like, optionally prefixed by
    /// `S^n ` (repeatable).
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut rest = text.trim();
        let mut suspension = 0;
        while let Some(tail) = rest.strip_prefix("S^") {
            let (n, base) = tail
                .split_once(char::is_whitespace)
                .ok_or_else(|| SpecError::Suspension(text.to_string()))?;
            suspension += n
                .parse::<i32>()
                .map_err(|_| SpecError::Suspension(text.to_string()))?;
            rest = base.trim_start();
        }
        let relators = match rest {
            "F2" => vec!["Sq1".to_string(), "Sq2".to_string()],
            "A1" => Vec::new(),
            _ => {
                let inner = rest
                    .strip_prefix("A1/(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| SpecError::Unknown(text.to_string()))?;
                inner.split(',').map(|r| r.trim().to_string()).collect()
            }
        };
        let spec = Self { suspension, relators };
        spec.elements()?;
        Ok(spec)
    }

    pub fn elements(&self) -> Result<Vec<A1Element>, SpecError> {
        self.relators
            .iter()
            .map(|r| {
                parse_element(r).map_err(|source| SpecError::Relator {
                    text: r.clone(),
                    source,
                })
            })
            .collect()
    }

    pub fn build(&self) -> Result<CyclicModule, SpecError> {
        let base = CyclicModule::new(&self.elements()?, self.base_name());
        Ok(base.suspend(self.suspension))
    }

    fn base_name(&self) -> String {
        match self.relators.as_slice() {
            [] => "A1".to_string(),
            [a, b] if a == "Sq1" && b == "Sq2" => "F2".to_string(),
            rs => format!("A1/({})", rs.join(",")),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.suspension != 0 {
            write!(f, "S^{} ", self.suspension)?;
        }
        f.write_str(&self.base_name())
    }
}

/// Where the generator of a cyclic module goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorImage {
    /// The target's generator.
    Generator,
    /// `x * generator` in the target.
    Element(String),
    /// The only nonzero vector of the target in the generator's degree.
    UniqueNonzero,
}

impl fmt::Display for GeneratorImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorImage::Generator => f.write_str("generator"),
            GeneratorImage::Element(x) => f.write_str(x),
            GeneratorImage::UniqueNonzero => f.write_str("unique nonzero class"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegistryEntry {
    pub id: &'static str,
    /// The cofiber sequence and a verbatim phrase of the claim.
    pub citation: &'static str,
    pub sub: ModuleSpec,
    pub mid: ModuleSpec,
    pub quot: ModuleSpec,
    pub inj_gen_image: GeneratorImage,
    pub surj_gen_image: GeneratorImage,
    pub notes: Option<&'static str>,
}

fn entry(
    id: &'static str,
    citation: &'static str,
    sub: ModuleSpec,
    mid: ModuleSpec,
    quot: ModuleSpec,
    inj: GeneratorImage,
) -> RegistryEntry {
    RegistryEntry {
        id,
        citation,
        sub,
        mid,
        quot,
        inj_gen_image: inj,
        surj_gen_image: GeneratorImage::Generator,
        notes: None,
    }
}

fn el(x: &str) -> GeneratorImage {
    GeneratorImage::Element(x.to_string())
}

pub fn registry() -> Vec<RegistryEntry> {
    use GeneratorImage::UniqueNonzero;
    let m = ModuleSpec::new;
    let f2 = ModuleSpec::f2;
    let mut s5 = entry(
        "S5",
        "ko<4> -> S^4 HZ -> S ko<8>: \"S^9 F_2\"",
        f2(9),
        m(4, &["Sq1"]),
        m(4, &["Sq1", "Sq2Sq3"]),
        UniqueNonzero,
    );
    s5.notes = Some(
        "The displayed middle term omits the S^4 forced by ko<4> -> S^4 HZ, and the \
         diagram labels the kernel S^8 F_2 while the sequence says S^9 F_2. Encoded with \
         middle S^4 A1/(Sq1) and kernel S^9 F2, the only placement that is exact.",
    );
    vec![
        entry(
            "S1",
            "ku -> HZ -> S^3 ku: \"induces the short exact sequence\"",
            m(3, &["Sq1", "Sq3"]),
            m(0, &["Sq1"]),
            m(0, &["Sq1", "Sq3"]),
            UniqueNonzero,
        ),
        entry(
            "S2",
            "ko -> HZ -> S ko<1>: \"induces the short exact sequence\"",
            m(2, &["Sq2"]),
            m(0, &["Sq1"]),
            f2(0),
            el("Sq2"),
        ),
        entry(
            "S3",
            "ko<1> -> S HF_2 -> S ko<2>: \"S(Sq^2) = S^3 A(1)/(Sq^3)\"",
            m(3, &["Sq3"]),
            m(1, &[]),
            m(1, &["Sq2"]),
            el("Sq2"),
        ),
        entry(
            "S4",
            "ko<2> -> S^2 HF_2 -> S ko<4>: \"S^2(Sq^3) = S^5 A(1)/(Sq^1,Sq^2Sq^3)\"",
            m(5, &["Sq1", "Sq2Sq3"]),
            m(2, &[]),
            m(2, &["Sq3"]),
            el("Sq3"),
        ),
        s5,
        entry(
            "S6",
            "ko -> ku -> S^2 ko (the eta c R sequence): \"induces the short exact sequence\"",
            f2(2),
            m(0, &["Sq1", "Sq3"]),
            f2(0),
            el("Sq2"),
        ),
        entry(
            "S7",
            "S ko -> ko<1> -> S^2 ku: \"only maps which can make the long exact sequence exact\"",
            m(2, &["Sq1", "Sq3"]),
            m(1, &["Sq2"]),
            f2(1),
            el("Sq1"),
        ),
        entry(
            "S8",
            "S ko<1> -> ko<2> -> S^4 ku: \"S^4 A(1)/(Sq^1,Sq^3)\"",
            m(4, &["Sq1", "Sq3"]),
            m(2, &["Sq3"]),
            m(2, &["Sq2"]),
            el("Sq2"),
        ),
        entry(
            "S9",
            "S^3 ku -> S ko<2> -> ko<4>: \"S^3 A(1)/(Sq^1,Sq^3)\"",
            m(4, &["Sq1", "Sq2Sq3"]),
            m(3, &["Sq3"]),
            m(3, &["Sq1", "Sq3"]),
            el("Sq1"),
        ),
        entry(
            "S10",
            "S^5 ku -> S ko<4> -> ko<8>: \"S^8 F_2\"",
            f2(8),
            m(5, &["Sq1", "Sq2Sq3"]),
            m(5, &["Sq1", "Sq3"]),
            UniqueNonzero,
        ),
    ]
}

pub fn find_entry(id: &str) -> Option<RegistryEntry> {
    registry().into_iter().find(|e| e.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryDims {
    pub sub: GradedDims,
    pub mid: GradedDims,
    pub quot: GradedDims,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub exact: bool,
    pub dims: Option<EntryDims>,
    pub dims_additive: bool,
    pub euler_additive: bool,
    /// Why the stored maps could not be built, if they could not.
    pub build_error: Option<String>,
    pub exactness: Option<ExactnessReport>,
    /// Number of exact pairs `(f, g)` found by exhaustive search.
    pub exact_pairs: Option<usize>,
    pub search_error: Option<String>,
}

fn morphism(
    source: &CyclicModule,
    target: &CyclicModule,
    image: &GeneratorImage,
) -> Result<ModuleMorphism, String> {
    let g = source.generator_degree();
    let t = target.module();
    let result = match image {
        GeneratorImage::Generator => ModuleMorphism::from_generator_element(source, target, a1().unit()),
        GeneratorImage::Element(x) => {
            let x = parse_element(x).map_err(|e| e.to_string())?;
            ModuleMorphism::from_generator_element(source, target, x)
        }
        GeneratorImage::UniqueNonzero => {
            if t.dim(g) != 1 {
                return Err(format!(
                    "{} has dimension {} in degree {g}, so no unique nonzero class",
                    t.name(),
                    t.dim(g)
                ));
            }
            ModuleMorphism::from_generator_image(source, t, &BitVec::unit(1, 0))
        }
    };
    result.map_err(|e| e.to_string())
}

fn maps_between(
    e: &RegistryEntry,
    sub: &CyclicModule,
    mid: &CyclicModule,
    quot: &CyclicModule,
) -> Result<(ModuleMorphism, ModuleMorphism), String> {
    let f = morphism(sub, mid, &e.inj_gen_image)?;
    let g = morphism(mid, quot, &e.surj_gen_image)?;
    Ok((f, g))
}

/// The injection and surjection an entry describes.
pub fn build_maps(e: &RegistryEntry) -> Result<(ModuleMorphism, ModuleMorphism), String> {
    let build = |m: &ModuleSpec| m.build().map_err(|err| err.to_string());
    maps_between(e, &build(&e.sub)?, &build(&e.mid)?, &build(&e.quot)?)
}

pub fn verify_entry(e: &RegistryEntry) -> EntryReport {
    let mut report = EntryReport {
        id: e.id.to_string(),
        exact: false,
        dims: None,
        dims_additive: false,
        euler_additive: false,
        build_error: None,
        exactness: None,
        exact_pairs: None,
        search_error: None,
    };
    let built = (|| Ok::<_, SpecError>((e.sub.build()?, e.mid.build()?, e.quot.build()?)))();
    let (sub, mid, quot) = match built {
        Ok(t) => t,
        Err(err) => {
            report.build_error = Some(err.to_string());
            return report;
        }
    };
    let dims = EntryDims {
        sub: poincare_series(sub.module()),
        mid: poincare_series(mid.module()),
        quot: poincare_series(quot.module()),
    };
    report.dims_additive = dims.sub.sum(&dims.quot) == dims.mid;
    report.euler_additive =
        dims.sub.euler_characteristic() + dims.quot.euler_characteristic() == dims.mid.euler_characteristic();
    report.dims = Some(dims);

    match find_exact_pairs(sub.module(), mid.module(), quot.module()) {
        Ok(pairs) => report.exact_pairs = Some(pairs.len()),
        Err(err) => report.search_error = Some(err.to_string()),
    }

    match maps_between(e, &sub, &mid, &quot) {
        Ok((f, g)) => {
            let exactness = ShortExactSeq::new(f, g).is_short_exact();
            report.exact = exactness.is_exact()
                && report.dims_additive
                && report.euler_additive
                && report.exact_pairs.is_some_and(|n| n > 0);
            report.exactness = Some(exactness);
        }
        Err(err) => report.build_error = Some(err),
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegistryReport {
    pub entries: Vec<EntryReport>,
}

impl RegistryReport {
    pub fn exact_count(&self) -> usize {
        self.entries.iter().filter(|r| r.exact).count()
    }

    pub fn passed(&self) -> bool {
        self.exact_count() == self.entries.len()
    }
}

pub fn verify_all() -> RegistryReport {
    RegistryReport {
        entries: registry().iter().map(verify_entry).collect(),
    }
}

#[derive(Serialize)]
struct ExportImages {
    inj: String,
    surj: String,
}

#[derive(Serialize)]
struct ExportEntry<'a> {
    id: &'a str,
    citation: &'a str,
    sub: String,
    mid: String,
    quot: String,
    images: ExportImages,
    verdict: &'a EntryReport,
}

/// The registry with its verdicts as a JSON array, in registry order.
pub fn export_json(entries: &[RegistryEntry], reports: &[EntryReport]) -> String {
    let doc: Vec<ExportEntry> = entries
        .iter()
        .zip(reports)
        .map(|(e, r)| ExportEntry {
            id: e.id,
            citation: e.citation,
            sub: e.sub.to_string(),
            mid: e.mid.to_string(),
            quot: e.quot.to_string(),
            images: ExportImages {
                inj: e.inj_gen_image.to_string(),
                surj: e.surj_gen_image.to_string(),
            },
            verdict: r,
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&doc).expect("registry serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::a1modules::left_ideal;
    use crate::gf2linalg::Subspace;
    use crate::morphisms::{image, is_isomorphic};

    fn report(id: &str) -> EntryReport {
        verify_entry(&find_entry(id).unwrap())
    }

    #[test]
    fn ten_entries_with_distinct_ids() {
        let r = registry();
        assert_eq!(r.len(), 10);
        let ids: Vec<&str> = r.iter().map(|e| e.id).collect();
        assert_eq!(ids, ["S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10"]);
    }

    #[test]
    fn spec_parse_and_print() {
        for text in ["F2", "A1", "A1/(Sq1,Sq3)", "S^3 A1/(Sq1,Sq2Sq3)", "S^-2 F2"] {
            assert_eq!(ModuleSpec::parse(text).unwrap().to_string(), text);
        }
        assert_eq!(ModuleSpec::parse("S^1 S^2 A1").unwrap().to_string(), "S^3 A1");
        assert!(ModuleSpec::parse("B2").is_err());
        assert!(ModuleSpec::parse("A1/(Sq4)").is_err());
        assert!(ModuleSpec::parse("S^x A1").is_err());
    }

    #[test]
    fn every_entry_is_exact() {
        for r in verify_all().entries {
            assert!(r.exact, "{r:?}");
            assert!(r.exact_pairs.unwrap() >= 1);
        }
    }

    #[test]
    fn s6_dimensions() {
        let r = report("S6");
        let dims = r.dims.unwrap();
        assert_eq!(dims.mid, GradedDims::from([(0, 1), (2, 1)]));
        assert_eq!(dims.sub.sum(&dims.quot), dims.mid);
    }

    #[test]
    fn s10_kernel_in_degree_eight() {
        let r = report("S10");
        assert!(r.exact);
        assert_eq!(r.dims.unwrap().sub, GradedDims::from([(8, 1)]));
    }

    #[test]
    fn wrong_suspension_is_not_exact() {
        let mut e = find_entry("S10").unwrap();
        e.sub = ModuleSpec::f2(7);
        let r = verify_entry(&e);
        assert!(!r.exact);
        assert_eq!(r.exact_pairs, Some(0));
        assert!(!r.dims_additive);
    }

    #[test]
    fn s5_uses_unique_class_in_degree_nine() {
        let e = find_entry("S5").unwrap();
        assert_eq!(e.inj_gen_image, GeneratorImage::UniqueNonzero);
        assert_eq!(e.mid.build().unwrap().module().dim(9), 1);
        assert!(verify_entry(&e).exact);
    }

    #[test]
    fn s3_and_s4_subs_are_suspended_ideals() {
        for (id, gen, shift) in [("S3", "Sq2", 1), ("S4", "Sq3", 2)] {
            let e = find_entry(id).unwrap();
            let sub = e.sub.build().unwrap();
            let (f, _) = build_maps(&e).unwrap();
            let (im, _) = image(&f);
            let ideal = left_ideal(&[parse_element(gen).unwrap()], gen).suspend(shift);
            assert!(is_isomorphic(&im, &ideal).unwrap().is_some(), "{id}");
            assert!(is_isomorphic(sub.module(), &ideal).unwrap().is_some(), "{id}");
        }
    }

    #[test]
    fn s7_exact_pairs_agree() {
        let e = find_entry("S7").unwrap();
        let (a, b, c) = (e.sub.build().unwrap(), e.mid.build().unwrap(), e.quot.build().unwrap());
        let pairs = find_exact_pairs(a.module(), b.module(), c.module()).unwrap();
        assert!(!pairs.is_empty());
        let signature = |(f, g): &(ModuleMorphism, ModuleMorphism)| -> Vec<(Subspace, Subspace)> {
            b.module()
                .degrees()
                .map(|d| (Subspace::column_space(&f.block(d)), Subspace::kernel_of(&g.block(d))))
                .collect()
        };
        let first = signature(&pairs[0]);
        for p in &pairs {
            assert_eq!(signature(p), first);
        }
    }

    #[test]
    fn surjections_send_generator_to_generator() {
        for e in registry() {
            assert_eq!(e.surj_gen_image, GeneratorImage::Generator);
        }
    }

    #[test]
    fn export_is_stable() {
        let entries = registry();
        let a = export_json(&entries, &verify_all().entries);
        let b = export_json(&entries, &verify_all().entries);
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 10);
        let positions: Vec<usize> = ["id", "citation", "sub", "mid", "quot", "images", "verdict"]
            .iter()
            .map(|k| a.find(&format!("\"{k}\":")).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }
}
