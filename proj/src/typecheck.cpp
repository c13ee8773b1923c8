#include "rolelogic/typecheck.hpp"

#include <string>

#include "rolelogic/error.hpp"

namespace rl {

namespace {

struct Checker {
  [[noreturn]] void fail(const FPtr& f, const std::string& path,
                         const std::string& what) {
    throw Error(ErrorKind::TypeMismatch,
                std::string(kind_name(f->kind)) + ": " + what, f->span, path);
  }

  void expect(const FPtr& f, const std::string& path, const Type& got,
              const Type& want, const char* role) {
    if (got != want)
      fail(f, path,
           std::string(role) + " has type " + got.str() + ", expected " +
               want.str());
  }

  Type check_bool_kids(const FPtr& f, const TypeContext& ctx,
                       const std::string& path) {
    for (size_t i = 0; i < f->kids.size(); ++i) {
      Type t = go(f->kids[i], ctx, path + "/" + std::to_string(i));
      expect(f, path, t, Type::boolean(), "operand");
    }
    return Type::boolean();
  }

  Type go(const FPtr& f, const TypeContext& ctx, const std::string& path) {
    switch (f->kind) {
      case FKind::True:
        return Type::boolean();
      case FKind::Var: {
        auto it = ctx.find(f->name);
        if (it == ctx.end())
          throw Error(ErrorKind::UnboundName, "'" + f->name + "'", f->span,
                      path);
        return it->second;
      }
      case FKind::Index:
        return Type::obj();
      case FKind::Id:
        return Type::rel(2);
      case FKind::And:
      case FKind::Not:
      case FKind::Prime:
      case FKind::Tilde:
      case FKind::CardGeq:
        return check_bool_kids(f, ctx, path);
      case FKind::Exists: {
        Type t = go(f->kids[0], ctx, path + "/0");
        expect(f, path, t, Type::rel(1), "quantifier argument");
        return Type::boolean();
      }
      case FKind::Lam:
        return Type::arrow(Type::obj(), go(f->kids[0], ctx, path + "/0"));
      case FKind::NamedLam: {
        TypeContext inner = ctx;
        inner[f->name] = f->type;
        return Type::arrow(f->type, go(f->kids[0], inner, path + "/0"));
      }
      case FKind::App: {
        Type tf = go(f->kids[0], ctx, path + "/0");
        Type ta = go(f->kids[1], ctx, path + "/1");
        if (tf.kind() != Type::Kind::Arrow)
          fail(f, path, "applying a non-function of type " + tf.str());
        if (tf.from() != ta)
          fail(f, path,
               "argument has type " + ta.str() + ", expected " +
                   tf.from().str());
        return tf.to();
      }
      case FKind::Star: {
        Type t = go(f->kids[0], ctx, path + "/0");
        expect(f, path, t, Type::rel(2), "closure argument");
        return Type::rel(2);
      }
      // sugar: boolean operands, boolean result
      case FKind::Or:
      case FKind::Implies:
      case FKind::Iff:
      case FKind::Curly:
      case FKind::Square:
      case FKind::CardEq:
      case FKind::CardLeq:
      case FKind::SumGeq:
      case FKind::SumEq:
      case FKind::SumLeq:
      case FKind::Disjoint:
      case FKind::Partition:
      case FKind::SetMinus:
      case FKind::ComposeOp:
      case FKind::TcPlus:
      case FKind::Rtc:
      case FKind::Acyclic:
      case FKind::TreeOp:
      case FKind::ImageOp:
      case FKind::Wlp:
        return check_bool_kids(f, ctx, path);
      case FKind::Let: {
        Type td = go(f->kids[0], ctx, path + "/0");
        expect(f, path, td, f->type, "definition");
        TypeContext inner = ctx;
        inner[f->name] = f->type;
        return go(f->kids[1], inner, path + "/1");
      }
    }
    throw Error(ErrorKind::Internal, "unhandled formula kind");
  }
};

}  // namespace

Type typecheck(const FPtr& f, const TypeContext& ctx) {
  Checker c;
  return c.go(f, ctx, "");
}

}  // namespace rl
