//! aesimg: encrypt grayscale PGM images with AES-128, quantify how well
//! the ciphertext hides the plaintext, and benchmark the two engines.
//!
//! Exit codes: 0 success, 2 usage, 3 I/O, 4 malformed input, 5
//! decryption integrity failure. With `--json` the only bytes on
//! standard output form one JSON document; everything human-readable
//! goes to standard error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use aesimg_core::aes;
use aesimg_core::analysis::{
    diff_image, key_sensitivity_suite, keyspace_report, npcr, scatter_sample, uaci, Direction,
    Histogram, WrongKeyDecrypt,
};
use aesimg_core::bench::{bench_suite, BenchParams, BenchReport};
use aesimg_core::image::{read_container, read_pgm, stream_to_image, write_container, write_pgm};
use aesimg_core::modes::ModeError;
use aesimg_core::synth::generate;
use aesimg_core::{
    decrypt_image, encrypt_image, CounterBlock, CryptError, EngineKind, GrayImage, Key128,
    ModeKind, SecurityReport,
};

const SCATTER_PAIRS: usize = 2000;
const SCATTER_SEED: u64 = 0x5ca7;

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
    Format(String),
    Integrity(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Format(_) => 4,
            CliError::Integrity(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Format(m) | CliError::Integrity(m) => {
                m
            }
        }
    }
}

#[derive(Parser)]
#[command(
    name = "aesimg",
    version,
    about = "AES-128 grayscale image encryption and analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt a PGM image into an AESI container
    Encrypt(EncryptArgs),
    /// Decrypt an AESI container back into a PGM image
    Decrypt(DecryptArgs),
    /// Run the security battery over an input/cipher image pair
    Analyze(AnalyzeArgs),
    /// Run the 1-bit sensitivity experiment
    Keysens(KeysensArgs),
    /// Measure software throughput and print the analytic model
    Bench(BenchArgs),
    /// Write a deterministic synthetic test image
    GenTestImage(GenArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    /// All ten rounds as straight-line code
    Unrolled,
    /// A round counter looping over one shared round body
    Fsm,
}

impl From<EngineArg> for EngineKind {
    fn from(e: EngineArg) -> EngineKind {
        match e {
            EngineArg::Unrolled => EngineKind::Unrolled,
            EngineArg::Fsm => EngineKind::Fsm,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Electronic codebook; deterministic per block, leaks structure
    Ecb,
    /// Counter mode; length-preserving, needs a fresh IV per key
    Ctr,
}

impl From<ModeArg> for ModeKind {
    fn from(m: ModeArg) -> ModeKind {
        match m {
            ModeArg::Ecb => ModeKind::Ecb,
            ModeArg::Ctr => ModeKind::Ctr,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PatternArg {
    /// Jittered ramp background with two large uniform rectangles
    FlatRegions,
    /// Horizontal ramp with maximal neighbor correlation
    Gradient,
    /// Uniform random pixels
    Noise,
}

impl From<PatternArg> for aesimg_core::synth::Pattern {
    fn from(p: PatternArg) -> aesimg_core::synth::Pattern {
        use aesimg_core::synth::Pattern;
        match p {
            PatternArg::FlatRegions => Pattern::FlatRegions,
            PatternArg::Gradient => Pattern::Gradient,
            PatternArg::Noise => Pattern::Noise,
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct KeyArgs {
    /// 128-bit key as 32 hex characters
    #[arg(long)]
    key: Option<String>,
    /// File holding exactly 16 raw key bytes
    #[arg(long)]
    key_file: Option<PathBuf>,
}

impl KeyArgs {
    fn load(&self) -> Result<Key128, CliError> {
        if let Some(hexstr) = &self.key {
            return Ok(Key128::new(parse_hex16(hexstr, "--key")?));
        }
        let path = self
            .key_file
            .as_ref()
            .expect("clap enforces one key source");
        let bytes = read_file(path)?;
        let bytes: [u8; 16] = bytes.try_into().map_err(|b: Vec<u8>| {
            CliError::Usage(format!(
                "key file {} must hold exactly 16 bytes, found {}",
                path.display(),
                b.len()
            ))
        })?;
        Ok(Key128::new(bytes))
    }
}

#[derive(Args)]
struct EncryptArgs {
    /// Input PGM image
    #[arg(long, short = 'i')]
    input: PathBuf,
    /// Output container path; `<output>.cipher.pgm` is written alongside
    #[arg(long, short = 'o')]
    output: PathBuf,
    #[command(flatten)]
    key: KeyArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Ctr)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = EngineArg::Fsm)]
    engine: EngineArg,
    /// CTR initial counter as 32 hex characters (default: random)
    #[arg(long)]
    iv: Option<String>,
    /// Accept a caller-chosen IV despite the reuse hazard
    #[arg(long)]
    allow_iv_reuse: bool,
    /// Print a JSON report on standard output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecryptArgs {
    /// Input AESI container
    #[arg(long, short = 'i')]
    input: PathBuf,
    /// Output PGM image
    #[arg(long, short = 'o')]
    output: PathBuf,
    #[command(flatten)]
    key: KeyArgs,
    #[arg(long, value_enum, default_value_t = EngineArg::Fsm)]
    engine: EngineArg,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Plaintext PGM image
    #[arg(long, short = 'i')]
    input: PathBuf,
    /// Cipher-image PGM rendering of the same scene
    #[arg(long, short = 'c')]
    cipher: PathBuf,
    /// Directory for histogram and scatter CSV files
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KeysensArgs {
    /// Input PGM image
    #[arg(long, short = 'i')]
    input: PathBuf,
    /// Directory for the experiment's image artifacts
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[command(flatten)]
    key: KeyArgs,
    /// Which bit to flip, 0 (key MSB) through 127
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=127))]
    flip_bit: u8,
    #[arg(long, value_enum, default_value_t = ModeArg::Ctr)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = EngineArg::Fsm)]
    engine: EngineArg,
    /// CTR initial counter as 32 hex characters (default: random)
    #[arg(long)]
    iv: Option<String>,
    /// Accept a caller-chosen IV despite the reuse hazard
    #[arg(long)]
    allow_iv_reuse: bool,
    /// Flip the bit in the plaintext instead of the key
    #[arg(long)]
    plaintext_diff: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Buffer size in MiB
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..=1024))]
    buffer_mib: u64,
    /// Minimum measurement window per grid cell
    #[arg(long, default_value_t = 2.0)]
    seconds: f64,
    /// Also measure multi-threaded CTR
    #[arg(long)]
    parallel: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    width: u32,
    #[arg(long)]
    height: u32,
    /// Generator seed; identical seeds give identical files
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum)]
    pattern: PatternArg,
    /// Output PGM path
    #[arg(long, short = 'o')]
    output: PathBuf,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    if let Err(e) = aes::verify_tables() {
        eprintln!("error: {e}");
        return ExitCode::from(5);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Encrypt(args) => cmd_encrypt(args),
        Command::Decrypt(args) => cmd_decrypt(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Keysens(args) => cmd_keysens(args),
        Command::Bench(args) => cmd_bench(args),
        Command::GenTestImage(args) => cmd_gen_test_image(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn parse_hex16(s: &str, what: &str) -> Result<[u8; 16], CliError> {
    let bytes = hex::decode(s).map_err(|e| CliError::Usage(format!("{what} must be hex: {e}")))?;
    bytes.try_into().map_err(|b: Vec<u8>| {
        CliError::Usage(format!(
            "{what} must be 32 hex characters (16 bytes), got {}",
            b.len()
        ))
    })
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_image(path: &Path) -> Result<GrayImage, CliError> {
    read_pgm(&read_file(path)?).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn path_with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut os = path.as_os_str().to_os_string();
    os.push(suffix);
    PathBuf::from(os)
}

/// Pick the CTR initial counter: a fresh random one unless the caller
/// pinned it and acknowledged the reuse hazard. ECB takes no IV.
fn resolve_iv(
    mode: ModeKind,
    iv: &Option<String>,
    allow_reuse: bool,
) -> Result<CounterBlock, CliError> {
    match (mode, iv) {
        (ModeKind::Ecb, Some(_)) => Err(CliError::Usage("--iv only applies to CTR mode".into())),
        (ModeKind::Ecb, None) => Ok(CounterBlock::new([0u8; 16])),
        (ModeKind::Ctr, Some(hexstr)) => {
            if !allow_reuse {
                return Err(CliError::Usage(
                    "--iv requires --allow-iv-reuse: reusing a counter under the same key \
                     discloses plaintext XORs"
                        .into(),
                ));
            }
            Ok(CounterBlock::new(parse_hex16(hexstr, "--iv")?))
        }
        (ModeKind::Ctr, None) => Ok(CounterBlock::new(rand::random())),
    }
}

fn crypt_err(e: CryptError) -> CliError {
    match e {
        CryptError::Mode(ModeError::Padding) => CliError::Integrity(
            "decryption integrity failure: wrong key or corrupted ciphertext".into(),
        ),
        CryptError::Mode(other) => CliError::Format(other.to_string()),
        CryptError::Image(other) => CliError::Format(other.to_string()),
    }
}

fn emit(json_mode: bool, doc: Value, human: String) {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("report serializes")
        );
        eprintln!("{human}");
    } else {
        println!("{human}");
    }
}

fn cmd_encrypt(args: EncryptArgs) -> Result<(), CliError> {
    let key = args.key.load()?;
    let mode = args.mode.into();
    let engine = args.engine.into();
    let iv = resolve_iv(mode, &args.iv, args.allow_iv_reuse)?;
    let img = read_image(&args.input)?;

    let container = encrypt_image(&img, &key, mode, engine, iv);
    let bytes = write_container(&container).map_err(|e| CliError::Format(e.to_string()))?;
    write_file(&args.output, &bytes)?;

    let rendering = stream_to_image(&container.ciphertext, img.width(), img.height())
        .expect("ciphertext covers the image");
    let cipher_image = path_with_suffix(&args.output, ".cipher.pgm");
    write_file(&cipher_image, &write_pgm(&rendering))?;

    let doc = json!({
        "container": args.output.display().to_string(),
        "cipher_image": cipher_image.display().to_string(),
        "mode": mode.name(),
        "engine": engine.name(),
        "iv": hex::encode(container.iv),
        "width": img.width(),
        "height": img.height(),
        "ciphertext_bytes": container.ciphertext.len(),
    });
    emit(
        args.json,
        doc,
        format!(
            "encrypted {} ({}x{}, {} {}) -> {} (+ {})",
            args.input.display(),
            img.width(),
            img.height(),
            mode.name(),
            engine.name(),
            args.output.display(),
            cipher_image.display()
        ),
    );
    Ok(())
}

fn cmd_decrypt(args: DecryptArgs) -> Result<(), CliError> {
    let key = args.key.load()?;
    let engine = args.engine.into();
    let bytes = read_file(&args.input)?;
    let container = read_container(&bytes)
        .map_err(|e| CliError::Format(format!("{}: {e}", args.input.display())))?;
    let img = decrypt_image(&container, &key, engine).map_err(crypt_err)?;
    write_file(&args.output, &write_pgm(&img))?;

    let doc = json!({
        "output": args.output.display().to_string(),
        "mode": container.mode.name(),
        "width": img.width(),
        "height": img.height(),
    });
    emit(
        args.json,
        doc,
        format!(
            "decrypted {} ({}) -> {} ({}x{})",
            args.input.display(),
            container.mode.name(),
            args.output.display(),
            img.width(),
            img.height()
        ),
    );
    Ok(())
}

fn write_histogram_csv(path: &Path, hist: &Histogram) -> Result<(), CliError> {
    let mut csv = String::from("level,count\n");
    for (level, count) in hist.bins.iter().enumerate() {
        csv.push_str(&format!("{level},{count}\n"));
    }
    write_file(path, csv.as_bytes())
}

fn write_scatter_csv(path: &Path, pairs: &[(u8, u8)]) -> Result<(), CliError> {
    let mut csv = String::from("x,y\n");
    for (x, y) in pairs {
        csv.push_str(&format!("{x},{y}\n"));
    }
    write_file(path, csv.as_bytes())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let input = read_image(&args.input)?;
    let cipher = read_image(&args.cipher)?;
    let report =
        SecurityReport::compute(&input, &cipher).map_err(|e| CliError::Usage(e.to_string()))?;

    fs::create_dir_all(&args.out_dir)
        .map_err(|e| CliError::Io(format!("{}: {e}", args.out_dir.display())))?;
    let input_hist = args.out_dir.join("input_histogram.csv");
    let cipher_hist = args.out_dir.join("cipher_histogram.csv");
    write_histogram_csv(&input_hist, &report.histogram_input)?;
    write_histogram_csv(&cipher_hist, &report.histogram_cipher)?;
    for (label, img) in [("input", &input), ("cipher", &cipher)] {
        for direction in Direction::ALL {
            let pairs = scatter_sample(img, direction, SCATTER_PAIRS, SCATTER_SEED);
            let path = args
                .out_dir
                .join(format!("{label}_scatter_{direction}.csv"));
            write_scatter_csv(&path, &pairs)?;
        }
    }

    let corr = |i: usize| {
        json!({
            "input": report.correlation_input[i].r,
            "cipher": report.correlation_cipher[i].r,
        })
    };
    let doc = json!({
        "entropy": {"input": report.entropy_input, "cipher": report.entropy_cipher},
        "correlation": {
            "horizontal": corr(0),
            "vertical": corr(1),
            "diagonal": corr(2),
        },
        "npcr": report.npcr,
        "uaci": report.uaci,
        "chi_square": report.chi_square,
        "histogram_files": [
            input_hist.display().to_string(),
            cipher_hist.display().to_string(),
        ],
    });

    let keyspace = keyspace_report(128).expect("128 is in range");
    let human = format!(
        "entropy: input {:.4}, cipher {:.5} (max 8)\n\
         correlation (input -> cipher): horizontal {:.4} -> {:.5}, vertical {:.4} -> {:.5}, \
         diagonal {:.4} -> {:.5}\n\
         cipher chi-square vs uniform: {:.2} (255 d.o.f.)\n\
         npcr: {:.4}%  uaci: {:.4}%\n\
         keyspace: 2^{} = {}\n\
         csv files in {}",
        report.entropy_input,
        report.entropy_cipher,
        report.correlation_input[0].r,
        report.correlation_cipher[0].r,
        report.correlation_input[1].r,
        report.correlation_cipher[1].r,
        report.correlation_input[2].r,
        report.correlation_cipher[2].r,
        report.chi_square,
        report.npcr,
        report.uaci,
        keyspace.k,
        keyspace.size,
        args.out_dir.display()
    );
    emit(args.json, doc, human);
    Ok(())
}

fn cmd_keysens(args: KeysensArgs) -> Result<(), CliError> {
    let key = args.key.load()?;
    let mode = args.mode.into();
    let engine = args.engine.into();
    let iv = resolve_iv(mode, &args.iv, args.allow_iv_reuse)?;
    let img = read_image(&args.input)?;
    fs::create_dir_all(&args.out_dir)
        .map_err(|e| CliError::Io(format!("{}: {e}", args.out_dir.display())))?;

    let mut files = Vec::new();
    let mut save = |name: &str, image: &GrayImage| -> Result<(), CliError> {
        let path = args.out_dir.join(name);
        write_file(&path, &write_pgm(image))?;
        files.push(path.display().to_string());
        Ok(())
    };

    if args.plaintext_diff {
        let byte = usize::from(args.flip_bit / 8);
        if byte >= img.pixel_count() {
            return Err(CliError::Usage(format!(
                "--flip-bit {} lands outside the {}-pixel image",
                args.flip_bit,
                img.pixel_count()
            )));
        }
        let mut flipped_pixels = img.pixels().to_vec();
        flipped_pixels[byte] ^= 0x80 >> (args.flip_bit % 8);
        let flipped = GrayImage::new(img.width(), img.height(), flipped_pixels)
            .expect("dimensions unchanged");

        let render = |c: &aesimg_core::CipherContainer| {
            stream_to_image(&c.ciphertext, img.width(), img.height())
                .expect("ciphertext covers the image")
        };
        let c_right = render(&encrypt_image(&img, &key, mode, engine, iv));
        let c_flipped = render(&encrypt_image(&flipped, &key, mode, engine, iv));
        let npcr_v: f64 = npcr(&c_right, &c_flipped).map_err(|e| CliError::Usage(e.to_string()))?;
        let uaci_v: f64 = uaci(&c_right, &c_flipped).map_err(|e| CliError::Usage(e.to_string()))?;
        let diff = diff_image(&c_right, &c_flipped).map_err(|e| CliError::Usage(e.to_string()))?;

        save("original.pgm", &img)?;
        save("cipher_right.pgm", &c_right)?;
        save("cipher_flipped.pgm", &c_flipped)?;
        save("diff.pgm", &diff)?;

        let doc = json!({
            "variant": "plaintext",
            "flip_bit": args.flip_bit,
            "npcr": npcr_v,
            "uaci": uaci_v,
            "files": files,
        });
        emit(
            args.json,
            doc,
            format!(
                "plaintext bit {} flip under {} {}: npcr {:.4}%, uaci {:.4}%",
                args.flip_bit,
                mode.name(),
                engine.name(),
                npcr_v,
                uaci_v
            ),
        );
        return Ok(());
    }

    let report = key_sensitivity_suite::<f64>(&img, &key, args.flip_bit, mode, engine, iv)
        .map_err(|e| CliError::Usage(e.to_string()))?;

    save("original.pgm", &img)?;
    save("cipher_right.pgm", &report.cipher_right)?;
    save("cipher_flipped.pgm", &report.cipher_flipped)?;
    save("diff.pgm", &report.diff)?;
    let wrong_key = match &report.wrong_key {
        WrongKeyDecrypt::Rejected => json!({"outcome": "rejected"}),
        WrongKeyDecrypt::Decrypted { image, entropy } => {
            save("decrypt_wrong.pgm", image)?;
            json!({"outcome": "decrypted", "entropy": entropy})
        }
    };
    save("decrypt_right.pgm", &report.decrypt_right)?;

    let doc = json!({
        "variant": "key",
        "flip_bit": report.flip_bit,
        "npcr": report.npcr,
        "uaci": report.uaci,
        "wrong_key": wrong_key,
        "right_key_exact": true,
        "files": files,
    });
    emit(
        args.json,
        doc,
        format!(
            "key bit {} flip under {} {}: npcr {:.4}%, uaci {:.4}%, wrong-key decrypt {}",
            report.flip_bit,
            mode.name(),
            engine.name(),
            report.npcr,
            report.uaci,
            match &report.wrong_key {
                WrongKeyDecrypt::Rejected => "rejected".to_string(),
                WrongKeyDecrypt::Decrypted { entropy, .. } =>
                    format!("noise (entropy {entropy:.4})"),
            }
        ),
    );
    Ok(())
}

fn render_bench_text(report: &BenchReport) -> String {
    let mut out = String::from("measured software throughput:\n");
    for r in &report.measured {
        out.push_str(&format!(
            "  {:>8} {:>3}  {:7.3} Gbps  ({} bytes in {:.2} s)\n",
            r.engine.name(),
            r.mode.name(),
            r.throughput_gbps,
            r.bytes_processed,
            r.elapsed_secs
        ));
    }
    if let Some(r) = &report.parallel_ctr {
        out.push_str(&format!(
            "  {:>8} ctr  {:7.3} Gbps  (multi-threaded)\n",
            r.engine.name(),
            r.throughput_gbps
        ));
    }
    out.push_str("analytic model, T = bits x f_max / latency (latency inferred):\n");
    for m in &report.model {
        out.push_str(&format!(
            "  {:<36} {:6.2} MHz / {} cycles -> {:.4} Gbps\n",
            m.label, m.f_max_mhz, m.latency_cycles, m.throughput_gbps
        ));
    }
    out.push_str("published FPGA results (informational, not measured here):\n");
    for r in &report.reference {
        out.push_str(&format!(
            "  {:<17} {:<24} {:6.2} MHz  {:>5} LUTs  {:5.3} W  {:.2} Gbps  {:.2} Mbps/LUT\n",
            r.architecture,
            r.platform,
            r.f_max_mhz,
            r.area_luts,
            r.power_w,
            r.throughput_gbps,
            r.efficiency_mbps_per_lut
        ));
    }
    out.pop();
    out
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    if args.seconds.is_nan() || args.seconds <= 0.0 {
        return Err(CliError::Usage("--seconds must be positive".into()));
    }
    let params = BenchParams {
        buffer_bytes: (args.buffer_mib as usize) * 1024 * 1024,
        min_duration: Duration::from_secs_f64(args.seconds),
        include_parallel_ctr: args.parallel,
    };
    eprintln!(
        "benchmarking {} MiB per pass, at least {:.2} s per cell...",
        args.buffer_mib, args.seconds
    );
    let report = bench_suite(params);
    let doc = serde_json::to_value(&report).expect("report serializes");
    emit(args.json, doc, render_bench_text(&report));
    Ok(())
}

fn cmd_gen_test_image(args: GenArgs) -> Result<(), CliError> {
    let pattern = args.pattern.into();
    let img = generate(args.width, args.height, args.seed, pattern)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    write_file(&args.output, &write_pgm(&img))?;
    let doc = json!({
        "output": args.output.display().to_string(),
        "width": args.width,
        "height": args.height,
        "seed": args.seed,
        "pattern": pattern.name(),
    });
    emit(
        args.json,
        doc,
        format!(
            "wrote {} ({}x{} {}, seed {})",
            args.output.display(),
            args.width,
            args.height,
            pattern.name(),
            args.seed
        ),
    );
    Ok(())
}
