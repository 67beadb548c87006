# Shared utilities for tame_langlands
