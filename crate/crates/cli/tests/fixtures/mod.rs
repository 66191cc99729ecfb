pub mod published_tables;
