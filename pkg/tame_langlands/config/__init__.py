# Configuration management for tame_langlands
