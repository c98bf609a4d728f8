use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::BigUint;
use serde::Serialize;

use crate::game::HatDistribution;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

/// Worst case and score histogram of one strategy over a set of
/// distributions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstCaseReport {
    pub strategy_name: String,
    pub n: usize,
    pub mode: SweepMode,
    pub min_correct: usize,
    /// `max(max{r, b} - cor)` over the evaluated distributions.
    pub worst_loss: i64,
    /// Last distribution (by enumeration index or sample number) that
    /// attains `worst_loss`.
    pub witness: HatDistribution,
    /// `correct_count -> number of distributions`, empty buckets omitted.
    pub histogram: BTreeMap<usize, u64>,
    /// `Σ cor` over all of `{R, B}^n`; exhaustive mode only.
    #[serde(serialize_with = "decimal")]
    pub total_correct: Option<BigUint>,
    pub evaluated: u64,
}

fn decimal<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

impl WorstCaseReport {
    pub fn max_correct(&self) -> usize {
        self.histogram.keys().next_back().copied().unwrap_or(0)
    }

    /// One CSV row per histogram bucket, summary columns repeated.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "strategy",
            "n",
            "mode",
            "correct_count",
            "distributions",
            "min_correct",
            "worst_loss",
            "witness",
            "evaluated",
            "total_correct",
        ])?;
        let mode = match self.mode {
            SweepMode::Exhaustive => "exhaustive",
            SweepMode::Sampled => "sampled",
        };
        let total = self.total_correct.as_ref().map(|t| t.to_string()).unwrap_or_default();
        for (correct, count) in &self.histogram {
            w.write_record([
                self.strategy_name.clone(),
                self.n.to_string(),
                mode.to_string(),
                correct.to_string(),
                count.to_string(),
                self.min_correct.to_string(),
                self.worst_loss.to_string(),
                self.witness.to_string(),
                self.evaluated.to_string(),
                total.clone(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Partial sweep state. Accumulators over disjoint key ranges merge into
/// the same result regardless of how the range was split.
#[derive(Debug, Clone)]
pub struct SweepAccumulator {
    n: usize,
    evaluated: u64,
    min_correct: usize,
    worst: Option<(i64, u64, HatDistribution)>,
    histogram: Vec<u64>,
    total_correct: u128,
}

impl SweepAccumulator {
    pub fn new(n: usize) -> SweepAccumulator {
        SweepAccumulator {
            n,
            evaluated: 0,
            min_correct: usize::MAX,
            worst: None,
            histogram: vec![0; n + 1],
            total_correct: 0,
        }
    }

    /// Record `cor = correct` on `omega`; `key` orders witnesses (the higher
    /// key wins a tie).
    pub fn record(&mut self, key: u64, omega: &HatDistribution, correct: usize) {
        self.evaluated += 1;
        self.min_correct = self.min_correct.min(correct);
        self.histogram[correct] += 1;
        self.total_correct += correct as u128;
        let loss = omega.majority_target() as i64 - correct as i64;
        let better = match &self.worst {
            None => true,
            Some((l, k, _)) => loss > *l || (loss == *l && key > *k),
        };
        if better {
            self.worst = Some((loss, key, omega.clone()));
        }
    }

    pub fn merge(mut self, other: SweepAccumulator) -> SweepAccumulator {
        assert_eq!(self.n, other.n, "merging sweeps of different sizes");
        self.evaluated += other.evaluated;
        self.min_correct = self.min_correct.min(other.min_correct);
        for (a, b) in self.histogram.iter_mut().zip(&other.histogram) {
            *a += b;
        }
        self.total_correct += other.total_correct;
        self.worst = match (self.worst, other.worst) {
            (None, w) | (w, None) => w,
            (Some(a), Some(b)) => {
                if b.0 > a.0 || (b.0 == a.0 && b.1 > a.1) {
                    Some(b)
                } else {
                    Some(a)
                }
            }
        };
        self
    }

    pub fn evaluated(&self) -> u64 {
        self.evaluated
    }

    /// `None` if nothing was recorded.
    pub fn finish(self, strategy_name: &str, mode: SweepMode) -> Option<WorstCaseReport> {
        let (worst_loss, _, witness) = self.worst?;
        let histogram = self
            .histogram
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k, c))
            .collect();
        Some(WorstCaseReport {
            strategy_name: strategy_name.to_string(),
            n: self.n,
            mode,
            min_correct: self.min_correct,
            worst_loss,
            witness,
            histogram,
            total_correct: (mode == SweepMode::Exhaustive).then(|| BigUint::from(self.total_correct)),
            evaluated: self.evaluated,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> HatDistribution {
        s.parse().unwrap()
    }

    #[test]
    fn merge_keeps_last_witness() {
        let mut a = SweepAccumulator::new(2);
        a.record(3, &d("RR"), 1);
        let mut b = SweepAccumulator::new(2);
        b.record(0, &d("BB"), 1);
        b.record(1, &d("RB"), 1);
        let ab = a.clone().merge(b.clone()).finish("t", SweepMode::Sampled).unwrap();
        let ba = b.merge(a).finish("t", SweepMode::Sampled).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(ab.witness, d("RR"));
        assert_eq!(ab.worst_loss, 1);
        assert_eq!(ab.total_correct, None);
        assert_eq!(ab.histogram, BTreeMap::from([(1, 3)]));
    }

    #[test]
    fn empty_accumulator_has_no_report() {
        assert!(SweepAccumulator::new(3).finish("t", SweepMode::Exhaustive).is_none());
    }

    #[test]
    fn csv_has_one_row_per_bucket() {
        let mut a = SweepAccumulator::new(2);
        a.record(0, &d("BB"), 1);
        a.record(1, &d("RB"), 0);
        let r = a.finish("t", SweepMode::Exhaustive).unwrap();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().nth(1).unwrap().starts_with("t,2,exhaustive,0,1,0,1,RB,2,1"));
    }
}
