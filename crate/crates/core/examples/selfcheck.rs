fn main() -> gravent::Result<()> {
    for report in gravent::selfcheck::run(None)? {
        println!("{report}");
    }
    Ok(())
}
