# Feature packages for tame_langlands
