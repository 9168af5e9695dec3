# Package marker for src
