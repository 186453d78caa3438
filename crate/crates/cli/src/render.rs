use std::io::{self, Write};

use clap::ValueEnum;
use foursq::record::{GenPayload, OutputRecord, SearchPayload, SeqPayload, VerifyPayload};
use foursq::symbolic::{IdentityKind, Level, ProofReport};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub struct Renderer {
    format: Format,
    color: bool,
}

fn color_from_env() -> bool {
    matches!(std::env::var("FOURSQ_COLOR").as_deref(), Ok("1" | "always" | "true"))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

impl Renderer {
    pub fn new(format: Format) -> Self {
        Renderer { format, color: color_from_env() }
    }

    fn json<P: Serialize>(&self, out: &mut dyn Write, rec: &OutputRecord<P>) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, rec)?;
        writeln!(out)
    }

    fn csv(&self, out: &mut dyn Write, header: &[&str], rows: Vec<Vec<String>>) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(header).map_err(csv_err)?;
        for row in rows {
            w.write_record(&row).map_err(csv_err)?;
        }
        w.flush()
    }

    /// Right-aligned columns, header optionally bold.
    fn table(&self, out: &mut dyn Write, header: &[&str], rows: Vec<Vec<String>>) -> io::Result<()> {
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: Vec<String>| {
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
        };
        let head = line(header.iter().map(|h| h.to_string()).collect());
        if self.color {
            writeln!(out, "\x1b[1m{head}\x1b[0m")?;
        } else {
            writeln!(out, "{head}")?;
        }
        for row in rows {
            writeln!(out, "{}", line(row))?;
        }
        Ok(())
    }

    pub fn gen(&self, out: &mut dyn Write, rec: &OutputRecord<GenPayload>) -> io::Result<()> {
        const HEADER: [&str; 8] = ["n", "variant", "a", "r", "b", "c", "s", "admissible"];
        let rows = || {
            rec.payload
                .triples
                .iter()
                .map(|t| {
                    vec![
                        t.n.to_string(),
                        t.variant.to_string(),
                        t.a.to_string(),
                        t.r.to_string(),
                        t.b.to_string(),
                        t.c.to_string(),
                        opt(&t.s),
                        t.admissible.to_string(),
                    ]
                })
                .collect()
        };
        match self.format {
            Format::Json => self.json(out, rec),
            Format::Csv => self.csv(out, &HEADER, rows()),
            Format::Table => self.table(out, &HEADER, rows()),
        }
    }

    pub fn verify(&self, out: &mut dyn Write, rec: &OutputRecord<VerifyPayload>) -> io::Result<()> {
        let p = &rec.payload;
        match self.format {
            Format::Json => self.json(out, rec),
            Format::Csv => {
                let cert = p.certificate.as_ref();
                let root = |f: fn(&foursq::certify::Certificate) -> &foursq::Int| {
                    cert.map(|c| f(c).to_string()).unwrap_or_default()
                };
                let row = vec![
                    p.a.to_string(),
                    p.b.to_string(),
                    p.c.to_string(),
                    p.ok.to_string(),
                    root(|c| &c.r_ab),
                    root(|c| &c.r_ac),
                    root(|c| &c.r_bc),
                    root(|c| &c.r_abc),
                    opt(&p.failure.as_ref().map(|f| f.condition)),
                    opt(&p.failure.as_ref().map(|f| f.value.clone())),
                ];
                let header =
                    ["a", "b", "c", "ok", "r_ab", "r_ac", "r_bc", "r_abc", "failed", "value"];
                self.csv(out, &header, vec![row])
            }
            Format::Table => {
                if let Some(c) = &p.certificate {
                    writeln!(out, "ok: ({}, {}, {})", p.a, p.b, p.c)?;
                    writeln!(out, "  ab+1 = {}^2", c.r_ab)?;
                    writeln!(out, "  ac+1 = {}^2", c.r_ac)?;
                    writeln!(out, "  bc+1 = {}^2", c.r_bc)?;
                    writeln!(out, "  abc+1 = {}^2", c.r_abc)
                } else if let Some(f) = &p.failure {
                    writeln!(out, "fail: ({}, {}, {})", p.a, p.b, p.c)?;
                    writeln!(out, "  {}+1={} not square", f.condition, f.value)
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn search(&self, out: &mut dyn Write, rec: &OutputRecord<SearchPayload>) -> io::Result<()> {
        const HEADER: [&str; 7] = ["a", "b", "c", "r_ab", "r_ac", "r_bc", "r_abc"];
        let rows = || {
            rec.payload
                .triples
                .iter()
                .map(|t| {
                    let c = &t.certificate;
                    [&t.a, &t.b, &t.c, &c.r_ab, &c.r_ac, &c.r_bc, &c.r_abc]
                        .iter()
                        .map(|v| v.to_string())
                        .collect()
                })
                .collect()
        };
        match self.format {
            Format::Json => self.json(out, rec),
            Format::Csv => self.csv(out, &HEADER, rows()),
            Format::Table => {
                self.table(out, &HEADER, rows())?;
                writeln!(out, "{} triples with c <= {}", rec.payload.count, rec.payload.bound)?;
                if let Some(o) = &rec.payload.oracle {
                    let verdict = if o.agrees { "agrees" } else { "DISAGREES" };
                    writeln!(out, "brute-force oracle {verdict} ({} triples)", o.oracle_count)?;
                }
                Ok(())
            }
        }
    }

    pub fn prove(&self, out: &mut dyn Write, rec: &OutputRecord<ProofReport>) -> io::Result<()> {
        const HEADER: [&str; 5] = ["id", "kind", "result", "level", "statement"];
        let kind = |k: IdentityKind| match k {
            IdentityKind::Core => "core",
            IdentityKind::Probe => "probe",
            IdentityKind::Numeric => "numeric",
        };
        let level = |l: Option<Level>| match l {
            Some(Level::Exact) => "exact",
            Some(Level::Quotient) => "quotient",
            Some(Level::Sampled) => "sampled",
            None => "-",
        };
        let rows: Vec<Vec<String>> = rec
            .payload
            .items
            .iter()
            .map(|i| {
                vec![
                    i.id.clone(),
                    kind(i.kind).into(),
                    if i.pass { "pass" } else { "FAIL" }.into(),
                    level(i.level).into(),
                    i.statement.clone(),
                ]
            })
            .collect();
        match self.format {
            Format::Json => self.json(out, rec),
            Format::Csv => self.csv(out, &HEADER, rows),
            Format::Table => {
                for row in &rows {
                    writeln!(out, "{:<4} {:<8} {:<5} {:<9} {}", row[0], row[1], row[2], row[3], row[4])?;
                }
                for i in rec.payload.items.iter().filter(|i| !i.pass) {
                    writeln!(out, "{} residual: {}", i.id, opt(&i.residual))?;
                }
                let (ok, total) = rec.payload.core_counts();
                writeln!(out, "{ok}/{total} core identities pass")
            }
        }
    }

    pub fn seq(&self, out: &mut dyn Write, rec: &OutputRecord<SeqPayload>) -> io::Result<()> {
        let values = &rec.payload.values;
        match self.format {
            Format::Json => self.json(out, rec),
            Format::Csv => self.csv(
                out,
                &["n", "value"],
                values.iter().map(|v| vec![v.n.to_string(), v.value.to_string()]).collect(),
            ),
            Format::Table => {
                let line: Vec<String> = values.iter().map(|v| v.value.to_string()).collect();
                writeln!(out, "{}", line.join(" "))
            }
        }
    }
}
