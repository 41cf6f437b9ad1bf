//! One module per subcommand.

pub mod bench;
pub mod best;
pub mod dump_ratios;
pub mod gen_random;
pub mod ingest_fasta;
pub mod theory;
