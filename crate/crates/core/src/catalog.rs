//! Named example algebras, embedded from `catalog/*.json`.
//!
//! Fixtures are stored as printed in the literature, including the ones that
//! fail their own class check; those carry [`Status::Erratum`] and a note on
//! what goes wrong. The `-fix` and `-yau` entries are corrected or constructed
//! companions used where a passing input of the class is needed.

use crate::axioms::AlgebraClass;
use crate::error::{Error, Result};
use crate::format::{parse_document, Template};
use crate::presentation::Algebra;
use crate::scalar::ParameterBinding;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Passes its class check at every binding.
    Positive,
    /// Recorded as failing the class check.
    Negative,
    /// Printed as a member of the class but fails its check for some bindings.
    Erratum,
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub class: AlgebraClass,
    pub status: Status,
    pub file: &'static str,
    pub source: &'static str,
    pub provenance: &'static str,
}

impl CatalogEntry {
    pub fn template(&self) -> Template {
        parse_document(self.source).expect("catalog files are valid")
    }

    pub fn params(&self) -> Vec<String> {
        self.template().params
    }

    pub fn instantiate(&self, binding: &ParameterBinding) -> Result<Algebra> {
        self.template().algebra(binding)
    }
}

macro_rules! file {
    ($name:literal) => {
        ($name, include_str!(concat!("../catalog/", $name)))
    };
}

const fn entry(
    id: &'static str,
    class: AlgebraClass,
    status: Status,
    file: (&'static str, &'static str),
    provenance: &'static str,
) -> CatalogEntry {
    CatalogEntry { id, class, status, file: file.0, source: file.1, provenance }
}

use AlgebraClass::*;
use Status::*;

const ENTRIES: &[CatalogEntry] = &[
    entry("CA2a", CommHomAssoc, Positive, file!("ca2a.json"), "two-dimensional, alpha = diag(1,-1)"),
    entry("CA2b", CommHomAssoc, Positive, file!("ca2b.json"), "two-dimensional, alpha = diag(1,0)"),
    entry("CA3a", CommHomAssoc, Positive, file!("ca3a.json"), "three-dimensional, alpha = E11"),
    entry("CA3b", CommHomAssoc, Positive, file!("ca3b.json"), "three-dimensional diagonal product with parameters p1, p2, p3"),
    entry(
        "HP3",
        HomPoisson,
        Erratum,
        file!("hp3.json"),
        "three-dimensional Hom-Poisson family; alpha has no e1 component as printed. \
         Hom-associativity forces l3 = l5 = 0 (as(e1,e1,e2) = l3 e3, as(e1,e1,e3) = l5 e3) \
         and Hom-Leibniz at (e1,e1,e1) forces a l1 + c l2 = b l1 + d l2 = 0",
    ),
    entry(
        "THP2",
        TransposedHomPoisson,
        Erratum,
        file!("thp2.json"),
        "bracket {e1,e2} = e1 D(e2) - D(e1) e2 from the derivation D = diag(0, lambda), alpha = -id. \
         As printed the product is not Hom-associative: as(e1,e1,e2) = 2 e2; THP2-fix has e1 e1 = e1",
    ),
    entry(
        "THP2-as-hom-poisson",
        HomPoisson,
        Negative,
        file!("thp2.json"),
        "THP2 read as a Hom-Poisson algebra; the two classes only meet when lambda = 0",
    ),
    entry(
        "TP2",
        TransposedHomPoisson,
        Erratum,
        file!("tp2.json"),
        "transposed Poisson algebra with alpha = id and the map alpha_e1 = e1 * (-). \
         The bracket {e1,e2} = e2 breaks the transposed Leibniz rule at x = z = e1, y = e2, \
         where 2 e1.{e1,e2} = 2 e1 and both other terms vanish; \
         TP2-fix has {e1,e2} = e1",
    ),
    entry(
        "PLP2",
        HomPreLiePoisson,
        Erratum,
        file!("plp2.json"),
        "Hom-pre-Lie Poisson family with alpha = 2 id. \
         The first compatibility fails unless a = 0: (e1.e1)*alpha(e1) = 0 but alpha(e1).(e1*e1) = 2a e2",
    ),
    entry(
        "THP2-fix",
        TransposedHomPoisson,
        Positive,
        file!("thp2-fix.json"),
        "THP2 with e1 e1 = e1, so that e1 is a unit and D a derivation",
    ),
    entry(
        "TP2-fix",
        TransposedHomPoisson,
        Positive,
        file!("tp2-fix.json"),
        "TP2 with {e1,e2} = e1; alpha = id, alpha_e1 as in TP2, automorphism g = diag(2,1)",
    ),
    entry(
        "PLP3",
        HomPreLiePoisson,
        Positive,
        file!("plp3.json"),
        "(K[t]/(t^3), x.y, x*y = x.D(y)) with D = t d/dt, untwisted; g is the automorphism t -> 2t",
    ),
    entry(
        "PLP3-yau",
        HomPreLiePoisson,
        Positive,
        file!("plp3-yau.json"),
        "(K[t]/(t^3), x.y, x*y = x.D(y)) with D = t d/dt, Yau-twisted by the automorphism t -> 2t; multiplicative",
    ),
    entry(
        "THP3-yau",
        TransposedHomPoisson,
        Positive,
        file!("thp3-yau.json"),
        "sub-adjacent algebra of PLP3-yau; multiplicative",
    ),
];

pub fn list() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn get(id: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

pub fn instantiate(id: &str, binding: &ParameterBinding) -> Result<Algebra> {
    get(id)?.instantiate(binding)
}
