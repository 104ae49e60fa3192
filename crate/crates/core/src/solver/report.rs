//! Machine-readable solve reports.

use serde::Serialize;

use super::SolveResult;
use crate::game::ObligingGame;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub engine: String,
    pub game: GameSummary,
    pub winning: Vec<String>,
    pub losing: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy: Option<StrategyEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GameSummary {
    pub nodes: usize,
    pub edges: usize,
    pub colors: usize,
    pub strong_colors: usize,
    pub weak_colors: usize,
}

/// Certificate played from a node under the declaration-order permutation.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateEntry {
    pub node: String,
    pub stem: Vec<String>,
    #[serde(rename = "loop")]
    pub cycle: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StatsEntry {
    pub real_nodes: usize,
    pub won_real_nodes: usize,
    pub attractor_calls: u64,
    pub iterations: Vec<u64>,
    pub millis: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct StrategyEntry {
    pub memory: usize,
    pub strong: bool,
    pub gracious: bool,
}

impl Report {
    /// Report carrying only a winning region.
    pub fn from_region(game: &ObligingGame, engine: &str, region: &[bool]) -> Report {
        let arena = game.arena();
        let pick = |won: bool| {
            (0..game.n()).filter(|&v| region[v] == won).map(|v| arena.name(v).to_string()).collect()
        };
        Report {
            version: REPORT_VERSION,
            engine: engine.to_string(),
            game: GameSummary {
                nodes: game.n(),
                edges: arena.edge_count(),
                colors: game.color_names().len(),
                strong_colors: game.d(),
                weak_colors: game.k(),
            },
            winning: pick(true),
            losing: pick(false),
            certificates: Vec::new(),
            stats: None,
            strategy: None,
        }
    }

    pub fn from_solve(game: &ObligingGame, result: &SolveResult) -> Report {
        let mut report = Report::from_region(game, "cert", &result.region);
        let names = |vs: &[usize]| vs.iter().map(|&v| game.arena().name(v).to_string()).collect();
        report.certificates = result
            .certificates
            .iter()
            .filter(|((_, perm), _)| *perm == 0)
            .map(|(&(v, _), c)| CertificateEntry {
                node: game.arena().name(v).to_string(),
                stem: names(&c.stem),
                cycle: names(&c.cycle),
            })
            .collect();
        let s = &result.stats;
        report.stats = Some(StatsEntry {
            real_nodes: s.real_nodes,
            won_real_nodes: s.won_real_nodes,
            attractor_calls: s.attractor_calls,
            iterations: s.iterations.clone(),
            millis: s.elapsed.as_secs_f64() * 1000.0,
        });
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
