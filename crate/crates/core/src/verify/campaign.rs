//! Claim campaigns over graph families.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{random_gnp, random_planar};
use crate::graph::Graph;
use crate::io::parse_graph6;
use crate::limits::{Limits, DEFAULT_NODE_BUDGET};
use crate::par;

use super::claims::{check_claim_in, ClaimId, ClaimReport, Construction, Instance, Outcome};
use super::enumerate::enumerate_up_to;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Family {
    /// Every isomorphism class with `min_order..=max_order` vertices.
    Exhaustive {
        #[serde(default = "one")]
        min_order: usize,
        max_order: usize,
    },
    RandomPlanar {
        min_order: usize,
        max_order: usize,
        count: usize,
    },
    RandomGnp {
        min_order: usize,
        max_order: usize,
        p: f64,
        count: usize,
    },
    /// graph6 files, one graph per line.
    FileList { paths: Vec<PathBuf> },
}

fn one() -> usize {
    1
}

fn all_claims() -> Vec<ClaimId> {
    ClaimId::ALL.to_vec()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "all_claims")]
    pub claims: Vec<ClaimId>,
    /// Node budget per search call.
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default)]
    pub claim_budgets: BTreeMap<ClaimId, u64>,
    /// Worker threads; absent means available parallelism. Does not affect
    /// the report.
    #[serde(default, skip_serializing)]
    pub jobs: Option<usize>,
}

fn default_budget() -> u64 {
    DEFAULT_NODE_BUDGET
}

impl CampaignConfig {
    pub fn new(family: Family) -> Self {
        CampaignConfig {
            family,
            seed: 0,
            claims: all_claims(),
            budget: DEFAULT_NODE_BUDGET,
            claim_budgets: BTreeMap::new(),
            jobs: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: CampaignConfig =
            serde_json::from_str(text).map_err(|e| Error::Domain(format!("campaign config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Domain(format!("campaign config: {m}")));
        match &self.family {
            Family::Exhaustive {
                min_order,
                max_order,
            } if min_order > max_order => bad("min_order exceeds max_order"),
            Family::RandomPlanar {
                min_order,
                max_order,
                ..
            } if min_order > max_order || *min_order < 3 => {
                bad("random_planar needs 3 <= min_order <= max_order")
            }
            Family::RandomGnp {
                min_order,
                max_order,
                p,
                ..
            } if min_order > max_order || !(0.0..=1.0).contains(p) => {
                bad("random_gnp needs min_order <= max_order and 0 <= p <= 1")
            }
            _ if self.budget == 0 => bad("budget must be positive"),
            _ => Ok(()),
        }
    }

    fn limits_for(&self, claim: ClaimId) -> Limits {
        Limits::with_budget(self.claim_budgets.get(&claim).copied().unwrap_or(self.budget))
    }
}

/// The instances a family stands for, deterministically.
pub fn instances(cfg: &CampaignConfig) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    match &cfg.family {
        Family::Exhaustive {
            min_order,
            max_order,
        } => Ok(enumerate_up_to(*max_order)?
            .into_iter()
            .filter(|g| g.order() >= *min_order)
            .collect()),
        Family::RandomPlanar {
            min_order,
            max_order,
            count,
        } => Ok((0..*count)
            .map(|_| {
                let n = rng.gen_range(*min_order..=*max_order);
                random_planar(n, rng.gen())
            })
            .collect()),
        Family::RandomGnp {
            min_order,
            max_order,
            p,
            count,
        } => Ok((0..*count)
            .map(|_| {
                let n = rng.gen_range(*min_order..=*max_order);
                random_gnp(n, *p, rng.gen())
            })
            .collect()),
        Family::FileList { paths } => {
            let mut out = Vec::new();
            for path in paths {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                    path: path.display().to_string(),
                    reason: e.to_string(),
                })?;
                for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                    out.push(parse_graph6(line)?);
                }
            }
            Ok(out)
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub verified: usize,
    pub refuted: usize,
    pub inapplicable: usize,
    pub budget: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionCounts {
    pub success: usize,
    pub heuristic: usize,
    pub failure: usize,
    pub inapplicable: usize,
    pub budget: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub instances: usize,
    pub claims: BTreeMap<ClaimId, Counts>,
    pub constructions: BTreeMap<ClaimId, ConstructionCounts>,
    /// Every REFUTED report, sorted by claim then instance.
    pub refutations: Vec<ClaimReport>,
    /// Reports whose construction failed with a certificate.
    pub construction_failures: Vec<ClaimReport>,
    /// Reports that ran out of budget.
    pub budget_exhausted: Vec<ClaimReport>,
}

pub fn check_instance(cfg: &CampaignConfig, g: &Graph) -> Vec<ClaimReport> {
    let shared = Instance::new(g, Limits::with_budget(cfg.budget));
    cfg.claims
        .iter()
        .map(|&c| {
            if cfg.claim_budgets.contains_key(&c) {
                check_claim_in(c, &Instance::new(g, cfg.limits_for(c)))
            } else {
                check_claim_in(c, &shared)
            }
        })
        .collect()
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let graphs = instances(cfg)?;
    let jobs = cfg.jobs.unwrap_or_else(par::default_jobs);
    let per_instance = par::map(&graphs, jobs, |g| check_instance(cfg, g));
    Ok(aggregate(cfg, graphs.len(), per_instance.into_iter().flatten()))
}

fn aggregate(
    cfg: &CampaignConfig,
    instances: usize,
    reports: impl Iterator<Item = ClaimReport>,
) -> CampaignReport {
    let mut claims: BTreeMap<ClaimId, Counts> =
        cfg.claims.iter().map(|&c| (c, Counts::default())).collect();
    let mut constructions: BTreeMap<ClaimId, ConstructionCounts> = BTreeMap::new();
    let mut refutations = Vec::new();
    let mut construction_failures = Vec::new();
    let mut budget_exhausted = Vec::new();
    for r in reports {
        let counts = claims.entry(r.claim).or_default();
        match r.verdict {
            Outcome::Verified => counts.verified += 1,
            Outcome::Refuted => counts.refuted += 1,
            Outcome::Inapplicable => counts.inapplicable += 1,
            Outcome::Budget => counts.budget += 1,
        }
        if let Some(c) = &r.construction {
            let cc = constructions.entry(r.claim).or_default();
            match c {
                Construction::Success { heuristic, .. } => {
                    cc.success += 1;
                    cc.heuristic += usize::from(*heuristic);
                }
                Construction::Failure { .. } => cc.failure += 1,
                Construction::Inapplicable { .. } => cc.inapplicable += 1,
                Construction::Budget => cc.budget += 1,
            }
        }
        if matches!(r.construction, Some(Construction::Failure { .. })) {
            construction_failures.push(r.clone());
        }
        match r.verdict {
            Outcome::Refuted => refutations.push(r),
            Outcome::Budget => budget_exhausted.push(r),
            _ => {}
        }
    }
    let key = |r: &ClaimReport| (r.claim, r.instance.clone());
    refutations.sort_by_key(key);
    construction_failures.sort_by_key(key);
    budget_exhausted.sort_by_key(key);
    CampaignReport {
        config: cfg.clone(),
        instances,
        claims,
        constructions,
        refutations,
        construction_failures,
        budget_exhausted,
    }
}

impl CampaignReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn has_refutations(&self) -> bool {
        !self.refutations.is_empty()
    }

    /// Human-readable summary; the only place wall-clock time appears.
    pub fn table(&self, elapsed: Duration) -> String {
        let mut out = format!(
            "{:<6} {:>9} {:>8} {:>12} {:>7}   construction ok/heur/fail\n",
            "claim", "verified", "refuted", "inapplicable", "budget"
        );
        for (id, c) in &self.claims {
            let built = self
                .constructions
                .get(id)
                .map(|k| format!("{}/{}/{}", k.success, k.heuristic, k.failure))
                .unwrap_or_default();
            out.push_str(&format!(
                "{:<6} {:>9} {:>8} {:>12} {:>7}   {}\n",
                id.as_str(),
                c.verified,
                c.refuted,
                c.inapplicable,
                c.budget,
                built
            ));
        }
        out.push_str(&format!(
            "{} instances, {} refutations, {:.2}s\n",
            self.instances,
            self.refutations.len(),
            elapsed.as_secs_f64()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let cfg = CampaignConfig::from_json(
            r#"{"family":{"kind":"exhaustive","max_order":3},"claims":["T1","l1"]}"#,
        );
        // Claim ids are exact strings in JSON.
        assert!(cfg.is_err());
        let cfg = CampaignConfig::from_json(
            r#"{"family":{"kind":"exhaustive","max_order":3},"claims":["T1","L1"],"seed":7}"#,
        )
        .unwrap();
        assert_eq!(cfg.claims, vec![ClaimId::T1, ClaimId::L1]);
        assert_eq!(cfg.budget, DEFAULT_NODE_BUDGET);
        assert!(CampaignConfig::from_json(r#"{"family":{"kind":"nope"}}"#).is_err());
        assert!(CampaignConfig::from_json(
            r#"{"family":{"kind":"random_planar","min_order":2,"max_order":5,"count":1}}"#
        )
        .is_err());
    }

    #[test]
    fn empty_campaigns() {
        let mut cfg = CampaignConfig::new(Family::RandomPlanar {
            min_order: 5,
            max_order: 6,
            count: 0,
        });
        let r = run_campaign(&cfg).unwrap();
        assert_eq!(r.instances, 0);
        assert!(r.claims.values().all(|c| *c == Counts::default()));
        cfg.claims.clear();
        cfg.family = Family::Exhaustive {
            min_order: 1,
            max_order: 3,
        };
        let r = run_campaign(&cfg).unwrap();
        assert!(r.claims.is_empty() && r.refutations.is_empty());
    }

    #[test]
    fn random_families_follow_the_seed() {
        let mut cfg = CampaignConfig::new(Family::RandomGnp {
            min_order: 4,
            max_order: 7,
            p: 0.5,
            count: 5,
        });
        cfg.seed = 11;
        assert_eq!(instances(&cfg).unwrap(), instances(&cfg).unwrap());
        let a = instances(&cfg).unwrap();
        cfg.seed = 12;
        assert_ne!(a, instances(&cfg).unwrap());
    }
}
