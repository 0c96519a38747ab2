public class TrailingWhitespace {   
    int x;  
    
    int read() {	
        return x; 
    }
}
