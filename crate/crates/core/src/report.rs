//! CSV output for spreader sets, rankings, traces and graph statistics.

use std::io::Write;

use crate::baselines::RankedList;
use crate::epidemic::{Aggregate, SimTrace};
use crate::graph::{Graph, GraphStats};
use crate::metrics::infected_scale;
use crate::select::SpreaderSet;

pub type CsvResult = Result<(), csv::Error>;

/// Columns `rank,node_label,score_at_election`; ranks start at 1.
pub fn write_spreaders<W: Write>(g: &Graph, set: &SpreaderSet, out: W) -> CsvResult {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rank", "node_label", "score_at_election"])?;
    for (i, (&u, score)) in set.nodes.iter().zip(&set.scores).enumerate() {
        w.write_record([(i + 1).to_string(), g.label(u).to_string(), score.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Columns `rank,node_label,score`.
pub fn write_ranking<W: Write>(g: &Graph, ranked: &RankedList, out: W) -> CsvResult {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rank", "node_label", "score"])?;
    for (i, &u) in ranked.order.iter().enumerate() {
        w.write_record([(i + 1).to_string(), g.label(u).to_string(), ranked.scores[u].to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Columns `t,n_S,n_I,n_R,F_t`.
pub fn write_trace<W: Write>(trace: &SimTrace, n: usize, out: W) -> CsvResult {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "n_S", "n_I", "n_R", "F_t"])?;
    let f = infected_scale(trace, n);
    for t in 0..trace.steps() {
        w.write_record([
            t.to_string(),
            trace.susceptible[t].to_string(),
            trace.infected[t].to_string(),
            trace.recovered[t].to_string(),
            f[t].to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Columns `t,mean_F,std_F`.
pub fn write_aggregate<W: Write>(agg: &Aggregate, out: W) -> CsvResult {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "mean_F", "std_F"])?;
    for (t, (m, s)) in agg.mean_f.iter().zip(&agg.std_f).enumerate() {
        w.write_record([t.to_string(), m.to_string(), s.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_stats<W: Write>(stats: &GraphStats, out: W) -> CsvResult {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "m", "mean_degree", "max_degree", "mean_clustering", "heterogeneity"])?;
    w.write_record([
        stats.nodes.to_string(),
        stats.edges.to_string(),
        stats.mean_degree.to_string(),
        stats.max_degree.to_string(),
        stats.mean_clustering.to_string(),
        stats.heterogeneity.map_or("undefined".to_string(), |h| h.to_string()),
    ])?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::star;
    use crate::Method;

    #[test]
    fn spreader_csv_layout() {
        let g = star(3);
        let set = Method::VoteRank.select(&g, 1, &Default::default()).unwrap();
        let mut buf = Vec::new();
        write_spreaders(&g, &set, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "rank,node_label,score_at_election\n1,0,3\n");
    }

    #[test]
    fn empty_set_keeps_header() {
        let g = star(3);
        let mut buf = Vec::new();
        write_spreaders(&g, &SpreaderSet::new("degree", "r=0"), &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "rank,node_label,score_at_election\n");
    }
}
