//! JSON shapes of the command-line reports.

use serde::Serialize;

use relca_core::engine::Family;
use relca_core::oracle::OracleEntry;
use relca_core::space::SolutionSpaceReport;
use relca_core::RelationalContextFamily;

use crate::render;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConceptJson {
    pub name: String,
    pub extent: Vec<String>,
    pub intent: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ContextJson {
    pub id: String,
    /// Scaled attributes in ASCII syntax.
    pub attributes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub concepts: Option<Vec<ConceptJson>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FamilyJson {
    pub contexts: Vec<ContextJson>,
}

impl FamilyJson {
    pub fn new(family: &Family, rcf: &RelationalContextFamily, with_concepts: bool) -> Self {
        let contexts = (0..family.len())
            .map(|x| {
                let l = family.lattice(x);
                let k = l.context();
                let concepts = with_concepts.then(|| {
                    l.concepts()
                        .iter()
                        .map(|c| ConceptJson {
                            name: render::concept_name(rcf, x, &c.extent),
                            extent: c.extent.ones().map(|g| k.objects()[g].clone()).collect(),
                            intent: c.intent.ones().map(|m| render::attribute_ascii(rcf, &k.attributes()[m])).collect(),
                        })
                        .collect()
                });
                ContextJson { id: k.id().to_string(), attributes: k.scaled().map(|a| render::ascii(rcf, a)).collect(), concepts }
            })
            .collect();
        FamilyJson { contexts }
    }

    fn from_sets(sets: &[Vec<relca_core::ScaledAttribute>], rcf: &RelationalContextFamily) -> Self {
        let contexts = sets
            .iter()
            .zip(rcf.contexts())
            .map(|(s, k)| ContextJson { id: k.id().to_string(), attributes: s.iter().map(|a| render::ascii(rcf, a)).collect(), concepts: None })
            .collect();
        FamilyJson { contexts }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationJson {
    pub interval_size: u128,
    pub acceptable_count: usize,
    pub tested: usize,
    pub pruned: usize,
    pub is_lattice: bool,
    pub is_complete_lattice: bool,
    pub lfp: FamilyJson,
    pub gfp: FamilyJson,
    pub acceptable: Vec<FamilyJson>,
}

impl EnumerationJson {
    pub fn new(r: &SolutionSpaceReport, rcf: &RelationalContextFamily) -> Self {
        EnumerationJson {
            interval_size: r.interval_size,
            acceptable_count: r.acceptable.len(),
            tested: r.tested,
            pruned: r.pruned_count,
            is_lattice: r.is_lattice,
            is_complete_lattice: r.is_complete_lattice,
            lfp: FamilyJson::new(&r.lfp, rcf, false),
            gfp: FamilyJson::new(&r.gfp, rcf, false),
            acceptable: r.acceptable.iter().map(|f| FamilyJson::new(f, rcf, false)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleJson {
    pub family_count: usize,
    pub saturated_count: usize,
    pub self_supported_count: usize,
    pub acceptable_count: usize,
    pub acceptable: Vec<FamilyJson>,
}

impl OracleJson {
    pub fn new(entries: &[OracleEntry], rcf: &RelationalContextFamily) -> Self {
        OracleJson {
            family_count: entries.len(),
            saturated_count: entries.iter().filter(|e| e.saturated).count(),
            self_supported_count: entries.iter().filter(|e| e.self_supported).count(),
            acceptable_count: entries.iter().filter(|e| e.acceptable()).count(),
            acceptable: entries.iter().filter(|e| e.acceptable()).map(|e| FamilyJson::from_sets(&e.sets, rcf)).collect(),
        }
    }
}
