public class StringEscapes {
    String quotes = "he said \"hi\"";
    String tabbed = "a\tb\nc";
    String unicode = "\u00e9\u4e2d";
    char escaped = '\'';
    char nl = '\n';
    String backslash = "C:\\temp\\file";
}
