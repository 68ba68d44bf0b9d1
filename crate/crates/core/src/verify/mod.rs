//! Claim registry, instance supply and campaigns.

mod campaign;
mod claims;
mod enumerate;
mod replay;

pub use campaign::{
    check_instance, instances, run_campaign, CampaignConfig, CampaignReport, ConstructionCounts,
    Counts, Family,
};
pub use claims::{check_claim, check_claim_in, ClaimId, ClaimReport, Construction, Instance, Outcome};
pub use enumerate::{
    canonical_form, canonical_graph, enumerate_graphs, enumerate_up_to, MAX_ENUMERATION_ORDER,
};
pub use replay::{recheck_evidence, replay};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::graph::{Graph, VertexSet};
    use crate::limits::Limits;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn constructive_claims_hold_on_small_graphs() {
        for g in enumerate_up_to(5).unwrap() {
            let r = check_claim(ClaimId::T1, &g, &lim());
            assert_eq!(r.verdict, Outcome::Verified, "{}", r.instance);
            let r = check_claim(ClaimId::L1, &g, &lim());
            assert_ne!(r.verdict, Outcome::Refuted, "{}", r.instance);
        }
    }

    #[test]
    fn l1_on_k4() {
        let r = check_claim(ClaimId::L1, &complete(4), &lim());
        assert_eq!(r.verdict, Outcome::Verified);
    }

    #[test]
    fn every_claim_reports_on_the_wheel() {
        let w = wheel(5);
        for &c in ClaimId::ALL {
            let r = check_claim(c, &w, &lim());
            assert_ne!(r.verdict, Outcome::Budget, "{c}");
            replay(&r, &lim()).unwrap();
        }
        assert_eq!(check_claim(ClaimId::T9, &w, &lim()).verdict, Outcome::Verified);
        assert_eq!(check_claim(ClaimId::FC4, &w, &lim()).verdict, Outcome::Verified);
        assert_eq!(check_claim(ClaimId::T413, &w, &lim()).verdict, Outcome::Verified);
    }

    #[test]
    fn claim_ids_round_trip() {
        for &c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
            let js = serde_json::to_string(&c).unwrap();
            assert_eq!(js, format!("\"{c}\""));
        }
        assert_eq!(ClaimId::ALL.len(), 17);
    }

    #[test]
    fn evidence_rechecks_reject_forgeries() {
        let c4 = cycle(4);
        use crate::certificate::Evidence;
        assert!(recheck_evidence(&c4, &[Evidence::Cycle { vertices: vec![0, 1, 2, 3] }]).is_ok());
        assert!(recheck_evidence(&c4, &[Evidence::Cycle { vertices: vec![0, 2, 1, 3] }]).is_err());
        assert!(recheck_evidence(&c4, &[Evidence::Adjacent { u: 0, v: 2 }]).is_err());
        let s: VertexSet = [0usize].iter().collect();
        assert!(recheck_evidence(&c4, &[Evidence::Undominated { vertex: 2, dominator: s }]).is_ok());
        assert!(recheck_evidence(&c4, &[Evidence::Undominated { vertex: 1, dominator: s }]).is_err());
        let _ = Graph::new(0);
    }
}
