use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use prefix_normal::enumeration::bounds::{bound_values, upper_bound_holds};
use prefix_normal::enumeration::ext::{
    ext_count, ext_count_density, ext_lang_distinct, Separation,
};
use prefix_normal::enumeration::{count_prefix_normal, for_each_prefix_normal};
use prefix_normal::games::{
    block_outcome_formula, count_block_outcomes, solve_from, verify_block_lemma_detailed,
    BlockGameConfig, GameState, Player,
};
use prefix_normal::membership::survivor_counts;
use prefix_normal::{build_index, parse_word, BinaryWord, Budget, Method};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Prefix normal words: testing, normal forms, enumeration and games.
#[derive(Parser)]
#[command(name = "pnw", version)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Suppress progress messages on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(flatten)]
    budget: BudgetArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Longest word length for enumeration.
    #[arg(long, env = "PNW_MAX_ENUM_N", default_value_t = 30, global = true)]
    max_enum_n: usize,
    /// Longest word length for exhaustive filter sweeps.
    #[arg(long, env = "PNW_MAX_SWEEP_N", default_value_t = 26, global = true)]
    max_sweep_n: usize,
    /// Most cells for the free game.
    #[arg(long, env = "PNW_MAX_GAME_N", default_value_t = 13, global = true)]
    max_game_n: usize,
    /// Most plays visited by the block game verifier.
    #[arg(
        long,
        env = "PNW_MAX_BLOCK_PLAYS",
        default_value_t = 10_000_000,
        global = true
    )]
    max_block_plays: u128,
    /// Longest word plus extension length for `ext`.
    #[arg(long, env = "PNW_MAX_EXT_LEN", default_value_t = 30, global = true)]
    max_ext_len: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_enum_n: self.max_enum_n,
            max_sweep_n: self.max_sweep_n,
            max_game_n: self.max_game_n,
            max_block_plays: self.max_block_plays,
            max_ext_len: self.max_ext_len,
        }
    }
}

#[derive(Args)]
struct WordInput {
    /// Words written with the characters 0 and 1.
    words: Vec<String>,
    /// Read words from a file, one per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl WordInput {
    fn load(&self) -> Result<Vec<BinaryWord>> {
        let mut texts = self.words.clone();
        if let Some(path) = &self.file {
            let content =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            texts.extend(
                content
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(String::from),
            );
        }
        if texts.is_empty() {
            bail!("no words given");
        }
        texts
            .iter()
            .map(|t| parse_word(t).with_context(|| format!("bad word {t:?}")))
            .collect()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Test words for prefix normality. Exit code 0 if all pass, 1 otherwise.
    Test {
        #[command(flatten)]
        input: WordInput,
        /// naive, vseq, doubling, member, gaps or pnf-eq.
        #[arg(long, default_value = "member")]
        method: Method,
    },
    /// Print each word with its prefix normal forms with respect to 1 and 0.
    Pnf {
        #[command(flatten)]
        input: WordInput,
    },
    /// Ask whether some factor has the given numbers of 1s and 0s.
    Query {
        word: String,
        #[arg(long)]
        ones: usize,
        #[arg(long)]
        zeros: usize,
    },
    /// List prefix normal words of one length, or count them per length as CSV.
    Enum {
        /// List every word of this length, in lexicographic order.
        #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
        n: Option<usize>,
        /// Emit counts for lengths 1..=N.
        #[arg(long)]
        max_n: Option<usize>,
        /// Add one column per density.
        #[arg(long, requires = "max_n")]
        density: bool,
    },
    /// Extension-critical counts as CSV.
    Crit {
        #[arg(long)]
        max_n: usize,
    },
    /// Survivors of the rejection filters over all words of each length, as CSV.
    Ratios {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
    },
    /// Count extensions of a word.
    Ext {
        word: String,
        /// Extension length.
        #[arg(long, required_unless_present = "distinct_from")]
        m: Option<usize>,
        /// Only count results with this many 1s.
        #[arg(long)]
        density: Option<usize>,
        /// Search the shortest extension accepted for exactly one of the two words.
        #[arg(long, conflicts_with_all = ["m", "density"])]
        distinct_from: Option<String>,
        /// Search depth for --distinct-from.
        #[arg(long, default_value_t = 20)]
        max_m: usize,
    },
    /// Games on prefix normal words.
    Game {
        #[command(subcommand)]
        game: GameCommand,
    },
    /// Upper and lower bound values as CSV.
    Bounds {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        /// Add the exact count and check it against the upper bound.
        #[arg(long)]
        with_counts: bool,
    },
    /// Run every tester on seeded random words and report disagreements as CSV.
    Agree {
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GameCommand {
    /// Solve the free game on n empty cells, or from a position like 10_0_.
    Solve {
        #[arg(long, required_unless_present = "from")]
        n: Option<usize>,
        #[arg(long, conflicts_with = "n")]
        from: Option<String>,
    },
    /// Check Alice's balancing strategy in the block game.
    Blocks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Play every Bob strategy and check the final words (default).
        #[arg(long, conflicts_with = "count")]
        verify: bool,
        /// Count distinct final words when Bob places k zeros per block.
        #[arg(long)]
        count: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = run(&cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match code {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn progress(cli: &Cli, msg: impl FnOnce() -> String) {
    if !cli.quiet {
        eprintln!("{}", msg());
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8> {
    let budget = cli.budget.budget();
    match &cli.command {
        Command::Test { input, method } => {
            let mut all = true;
            for w in input.load()? {
                let outcome = method.test(&w);
                all &= outcome.accepted;
                if outcome.accepted {
                    writeln!(
                        out,
                        "{w}: prefix normal (decided by {})",
                        outcome.decided_by
                    )?;
                } else {
                    write!(
                        out,
                        "{w}: not prefix normal (decided by {})",
                        outcome.decided_by
                    )?;
                    match outcome.witness {
                        Some(v) => writeln!(out, "; witness: {v}")?,
                        None => writeln!(out)?,
                    }
                }
            }
            return Ok(if all { 0 } else { 1 });
        }
        Command::Pnf { input } => {
            for w in input.load()? {
                let index = build_index(&w);
                writeln!(out, "{w}\n{}\n{}", index.pnf_one(), index.pnf_zero())?;
            }
        }
        Command::Query { word, ones, zeros } => {
            let w = parse_word(word)?;
            let answer = build_index(&w).query(*ones, *zeros)?;
            let verdict = if answer.present { "yes" } else { "no" };
            writeln!(out, "{verdict} ({},{})", answer.min_ones, answer.max_ones)?;
        }
        Command::Enum { n, max_n, density } => match (n, max_n) {
            (Some(n), _) => {
                if *n > budget.max_enum_n {
                    bail!(
                        "n = {n} exceeds the enumeration budget {}",
                        budget.max_enum_n
                    );
                }
                let mut result = Ok(());
                for_each_prefix_normal(*n, |w| {
                    if result.is_ok() {
                        result = writeln!(out, "{w}");
                    }
                });
                result?;
            }
            (None, Some(max_n)) => {
                progress(cli, || {
                    format!("counting prefix normal words up to n = {max_n}")
                });
                let counts = count_prefix_normal(*max_n, &budget)?;
                write!(out, "n,pnw")?;
                if *density {
                    for d in 0..=*max_n {
                        write!(out, ",pnw_d{d}")?;
                    }
                }
                writeln!(out)?;
                for n in 1..=*max_n {
                    write!(out, "{n},{}", counts.pnw(n))?;
                    if *density {
                        for d in 0..=*max_n {
                            write!(out, ",{}", counts.pnw_density(n, d))?;
                        }
                    }
                    writeln!(out)?;
                }
            }
            (None, None) => bail!("give --n or --max-n"),
        },
        Command::Crit { max_n } => {
            progress(cli, || {
                format!("counting prefix normal words up to n = {max_n}")
            });
            let counts = count_prefix_normal(*max_n, &budget)?;
            writeln!(out, "n,pnw,crit,ratio,scaled_ratio")?;
            for r in counts.records() {
                writeln!(
                    out,
                    "{},{},{},{:.3},{:.3}",
                    r.n, r.pnw, r.crit, r.ratio, r.scaled_ratio
                )?;
            }
        }
        Command::Ratios { max_n, min_n } => {
            writeln!(out, "n,M_trivial,ratio_trivial,M_both,ratio_both")?;
            for n in *min_n..=*max_n {
                if n >= 20 {
                    progress(cli, || format!("sweeping 2^{n} words"));
                }
                let (trivial, both) = survivor_counts(n, budget.max_sweep_n)?;
                writeln!(
                    out,
                    "{n},{},{},{},{}",
                    trivial.survivors,
                    trivial.ratio_display(),
                    both.survivors,
                    both.ratio_display()
                )?;
            }
        }
        Command::Ext {
            word,
            m,
            density,
            distinct_from,
            max_m,
        } => {
            let w = parse_word(word)?;
            if let Some(other) = distinct_from {
                let other = parse_word(other)?;
                match ext_lang_distinct(&w, &other, *max_m)? {
                    Separation::Found(sep) => writeln!(out, "distinct: {sep}")?,
                    Separation::NoneFound { max_m } => {
                        writeln!(out, "no separating extension up to length {max_m}")?
                    }
                }
            } else {
                let m = m.expect("clap requires --m here");
                let count = match density {
                    Some(d) => ext_count_density(&w, m, *d, &budget)?,
                    None => ext_count(&w, m, &budget)?,
                };
                writeln!(out, "{count}")?;
            }
        }
        Command::Game { game } => match game {
            GameCommand::Solve { n, from } => {
                let start = match (n, from) {
                    (_, Some(text)) => text.parse::<GameState>()?,
                    (Some(n), None) => GameState::new(*n),
                    (None, None) => bail!("give --n or --from"),
                };
                let result = solve_from(&start, &budget)?;
                writeln!(out, "winner: {}", result.winner)?;
                match result.winning_first_move(&start) {
                    Some(mv) => writeln!(out, "first winning move: {mv}")?,
                    None if result.winner == Player::Alice => {
                        writeln!(out, "first winning move: none (Bob to move)")?
                    }
                    None => {}
                }
                let line: Vec<String> = result
                    .principal_variation
                    .iter()
                    .map(|m| m.to_string())
                    .collect();
                writeln!(out, "line: {}", line.join(", "))?;
                writeln!(out, "final word: {}", result.final_word)?;
            }
            GameCommand::Blocks { n, k, count, .. } => {
                let config = BlockGameConfig::new(*n, *k)?;
                if *count {
                    let outcomes = count_block_outcomes(&config, &budget)?;
                    let formula = block_outcome_formula(&config)
                        .map_or_else(|| "overflow".to_string(), |c| c.to_string());
                    writeln!(out, "outcomes: {outcomes} (binomial formula: {formula})")?;
                } else {
                    let v = verify_block_lemma_detailed(&config, &budget)?;
                    writeln!(out, "plays: {}", v.plays)?;
                    match v.counterexample {
                        None => writeln!(out, "lemma holds: true")?,
                        Some(w) => {
                            writeln!(out, "lemma holds: false (counterexample {w})")?;
                            return Ok(1);
                        }
                    }
                }
            }
        },
        Command::Bounds {
            max_n,
            min_n,
            with_counts,
        } => {
            let counts = if *with_counts {
                progress(cli, || {
                    format!("counting prefix normal words up to n = {max_n}")
                });
                Some(count_prefix_normal(*max_n, &budget)?)
            } else {
                None
            };
            write!(out, "n,upper_k,upper_ratio,lower_k,lower_log2")?;
            if counts.is_some() {
                write!(out, ",pnw,pnw_ratio,upper_holds")?;
            }
            writeln!(out)?;
            for n in (*min_n).max(2)..=*max_n {
                let b = bound_values(n)?;
                write!(
                    out,
                    "{n},{},{:.3},{},{:.3}",
                    b.upper_k, b.upper_ratio, b.lower_k, b.lower_log2
                )?;
                if let Some(c) = &counts {
                    let pnw = c.pnw(n);
                    let ratio = pnw as f64 / (n as f64).exp2();
                    write!(out, ",{pnw},{ratio:.3},{}", upper_bound_holds(n, pnw)?)?;
                }
                writeln!(out)?;
            }
        }
        Command::Agree {
            length,
            samples,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut accepted = 0usize;
            let mut disagreements = 0usize;
            for _ in 0..*samples {
                let w: BinaryWord = (0..*length).map(|_| rng.gen::<bool>()).collect();
                let reference = Method::Naive.test(&w).accepted;
                accepted += usize::from(reference);
                if Method::ALL.iter().any(|m| m.test(&w).accepted != reference) {
                    disagreements += 1;
                    progress(cli, || format!("disagreement on {w}"));
                }
            }
            writeln!(out, "length,samples,seed,accepted,disagreements")?;
            writeln!(out, "{length},{samples},{seed},{accepted},{disagreements}")?;
            if disagreements > 0 {
                return Ok(1);
            }
        }
    }
    Ok(0)
}
