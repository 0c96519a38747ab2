public class BlankHeavy {


    int a;



    int b;

}
