//! Edit datasets: the record schema, JSONL/CSV I/O and a synthetic effort simulator.

mod csv_io;
mod jsonl;
mod record;
mod simulate;

pub use csv_io::{read_csv_records, read_csv_table, write_csv_records, CsvTable};
pub use jsonl::{load_jsonl, parse_jsonl, write_jsonl, LineError, LoadedDataset};
pub use record::{EditRecord, Scenario};
pub use simulate::{simulate_effort_dataset, OP_MIX};
