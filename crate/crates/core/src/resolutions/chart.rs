use std::collections::BTreeMap;

use serde::Serialize;

/// Dimensions of `Ext^{s,t}(M, F_2)` over a window of filtrations and
/// internal degrees.
///
/// Only entries with `s <= max_s` and `t <= reliable_max_t` are reported;
/// anything above `reliable_max_t` is treated as unstable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtChart {
    counts: BTreeMap<(usize, i32), usize>,
    max_s: usize,
    reliable_max_t: i32,
}

#[derive(Serialize)]
struct ChartEntry {
    s: usize,
    t: i32,
    stem: i32,
    count: usize,
}

#[derive(Serialize)]
struct ChartJson<'a> {
    max_s: usize,
    reliable_max_t: i32,
    entries: Vec<ChartEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    module: Option<&'a str>,
}

impl ExtChart {
    pub fn new(counts: BTreeMap<(usize, i32), usize>, max_s: usize, reliable_max_t: i32) -> Self {
        let counts = counts
            .into_iter()
            .filter(|&((s, t), n)| n > 0 && s <= max_s && t <= reliable_max_t)
            .collect();
        Self {
            counts,
            max_s,
            reliable_max_t,
        }
    }

    pub fn max_s(&self) -> usize {
        self.max_s
    }

    pub fn reliable_max_t(&self) -> i32 {
        self.reliable_max_t
    }

    pub fn in_window(&self, s: usize, t: i32) -> bool {
        s <= self.max_s && t <= self.reliable_max_t
    }

    /// The count at `(s, t)`, or `None` outside the reliable window.
    pub fn get(&self, s: usize, t: i32) -> Option<usize> {
        self.in_window(s, t)
            .then(|| self.counts.get(&(s, t)).copied().unwrap_or(0))
    }

    /// Nonzero entries as `((s, t), count)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i32), usize)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// Counts in stem `n = t - s` for each reliable filtration, ascending.
    pub fn stem(&self, n: i32) -> Vec<(usize, usize)> {
        (0..=self.max_s)
            .filter_map(|s| self.get(s, n + s as i32).map(|c| (s, c)))
            .collect()
    }

    /// Restriction to a smaller window.
    pub fn restrict(&self, max_s: usize, reliable_max_t: i32) -> Self {
        Self::new(
            self.counts.clone(),
            max_s.min(self.max_s),
            reliable_max_t.min(self.reliable_max_t),
        )
    }

    /// The same chart with every `t` moved by `n`.
    pub fn shift_t(&self, n: i32) -> Self {
        Self {
            counts: self.counts.iter().map(|(&(s, t), &c)| ((s, t + n), c)).collect(),
            max_s: self.max_s,
            reliable_max_t: self.reliable_max_t + n,
        }
    }

    pub fn to_json(&self, module: Option<&str>) -> String {
        let doc = ChartJson {
            max_s: self.max_s,
            reliable_max_t: self.reliable_max_t,
            entries: self
                .entries()
                .map(|((s, t), count)| ChartEntry {
                    s,
                    t,
                    stem: t - s as i32,
                    count,
                })
                .collect(),
            module,
        };
        serde_json::to_string_pretty(&doc).expect("chart serializes")
    }
}
